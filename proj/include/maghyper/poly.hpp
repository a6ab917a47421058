#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maghyper/errors.hpp"
#include "maghyper/int.hpp"

namespace maghyper {

/// Polynomial in x = sqrt(q) with arbitrary-precision integer coefficients.
/// Exponent e of x encodes q^{e/2}. Stored dense and trimmed: coefficient of
/// the highest stored exponent is nonzero (empty vector = zero polynomial).
class HalfPoly {
 public:
  HalfPoly() = default;
  HalfPoly(int constant) : HalfPoly(Int(constant)) {}  // NOLINT: by design
  explicit HalfPoly(const Int& constant);

  static HalfPoly from_coeffs(std::vector<Int> ascending);
  static HalfPoly monomial(int exponent, const Int& coeff);

  bool is_zero() const { return c_.empty(); }
  /// Degree in x; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int exponent) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  /// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;

  HalfPoly operator-() const;
  HalfPoly& operator+=(const HalfPoly& o);
  HalfPoly& operator-=(const HalfPoly& o);
  HalfPoly& operator*=(const HalfPoly& o);

  friend HalfPoly operator+(HalfPoly a, const HalfPoly& b) { return a += b; }
  friend HalfPoly operator-(HalfPoly a, const HalfPoly& b) { return a -= b; }
  friend HalfPoly operator*(const HalfPoly& a, const HalfPoly& b);
  friend bool operator==(const HalfPoly& a, const HalfPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const HalfPoly& a, const HalfPoly& b) {
    return !(a == b);
  }

  /// Multiply every coefficient by s.
  HalfPoly scaled(const Int& s) const;
  /// Divide every coefficient by s; throws InternalError if not exact.
  HalfPoly divided(const Int& s) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Quotient a / b when b divides a exactly in Z[x]; throws InternalError
/// otherwise (callers use this only where exactness is a proven invariant).
HalfPoly divide_exact(const HalfPoly& a, const HalfPoly& b);

/// gcd in Z[x], computed by a primitive pseudo-remainder sequence; the result
/// is primitive with positive leading coefficient times gcd of the contents.
HalfPoly poly_gcd(HalfPoly a, HalfPoly b);

/// Truncated power series in x = sqrt(q): coefficients for x^0 .. x^{order}.
struct HalfSeries {
  int order = 0;
  std::vector<Int> coeffs;  ///< size order + 1

  static HalfSeries zeros(int order);
  Int coeff(int exponent) const { return coeffs.at(exponent); }
  friend bool operator==(const HalfSeries& a, const HalfSeries& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const HalfSeries& a, const HalfSeries& b) {
    return !(a == b);
  }
  std::string str() const;
};

/// Element of Q(x) stored as a canonical fraction of integer polynomials:
/// gcd(num, den) = 1 in Z[x], gcd of the two contents divided out, and the
/// denominator's leading coefficient positive. Construction canonicalizes.
class RationalFn {
 public:
  RationalFn() : num_(0), den_(1) {}
  RationalFn(int constant) : num_(constant), den_(1) {}  // NOLINT: by design
  RationalFn(HalfPoly num, HalfPoly den);
  explicit RationalFn(HalfPoly num) : RationalFn(std::move(num), HalfPoly(1)) {}

  const HalfPoly& num() const { return num_; }
  const HalfPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFn& a, const RationalFn& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  HalfPoly num_;
  HalfPoly den_;
};

/// Power-series expansion of r at x = 0 through x^{order}. Throws InputError
/// when den(0) = 0, or when a coefficient fails to be an integer (the series
/// type is integral; callers in this library always have den(0) = ±1).
HalfSeries series_expand(const RationalFn& r, int order);

using PolyMatrix = Eigen::Matrix<HalfPoly, Eigen::Dynamic, Eigen::Dynamic>;
using PolyVector = Eigen::Matrix<HalfPoly, Eigen::Dynamic, 1>;

/// Exact solution of A w = b over Q(x) by fraction-free (Bareiss) forward
/// elimination followed by rational back-substitution. Throws InputError when
/// A is singular as a polynomial matrix.
std::vector<RationalFn> linsolve_rational(const PolyMatrix& a,
                                          const PolyVector& b);

}  // namespace maghyper

namespace Eigen {

template <>
struct NumTraits<maghyper::HalfPoly> {
  using Real = maghyper::HalfPoly;
  using NonInteger = maghyper::HalfPoly;
  using Nested = maghyper::HalfPoly;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return maghyper::HalfPoly(0); }
  static inline Real dummy_precision() { return maghyper::HalfPoly(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
