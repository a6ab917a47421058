#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "maghyper/errors.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace maghyper {

/// Arbitrary-precision signed integer with a deliberately closed conversion
/// surface (int / long long / decimal string only), so it can act as an Eigen
/// matrix scalar. cpp_int itself cannot: its catch-all "byte container"
/// constructor probes arbitrary class types for iterators, which explodes on
/// Eigen expression templates during overload resolution.
class Int {
 public:
  using Rep = boost::multiprecision::cpp_int;

  Int() = default;
  Int(int v) : v_(v) {}                 // NOLINT: implicit by design (literals)
  Int(long v) : v_(v) {}                // NOLINT: implicit by design
  Int(long long v) : v_(v) {}           // NOLINT: implicit by design
  explicit Int(const std::string& decimal) : v_(decimal) {}
  explicit Int(Rep v) : v_(std::move(v)) {}

  const Rep& rep() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Exact decimal representation (leading '-' for negatives).
  std::string str() const { return v_.str(); }

  /// Narrowing accessor for rendering small values; throws std::overflow_error
  /// if the value does not fit.
  long long to_int64() const {
    if (v_ > std::numeric_limits<long long>::max() ||
        v_ < std::numeric_limits<long long>::min()) {
      throw std::overflow_error("Int::to_int64: value exceeds 64-bit range");
    }
    return static_cast<long long>(v_);
  }

  Int operator-() const { return Int(-v_); }

  Int& operator+=(const Int& o) {
    v_ += o.v_;
    return *this;
  }
  Int& operator-=(const Int& o) {
    v_ -= o.v_;
    return *this;
  }
  Int& operator*=(const Int& o) {
    v_ *= o.v_;
    return *this;
  }
  /// Truncated (round-toward-zero) division, like built-in integers.
  Int& operator/=(const Int& o) {
    v_ /= o.v_;
    return *this;
  }
  Int& operator%=(const Int& o) {
    v_ %= o.v_;
    return *this;
  }

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Int& x) {
    return os << x.v_;
  }

 private:
  Rep v_;
};

inline Int abs(const Int& a) { return a.sign() < 0 ? -a : a; }

inline Int gcd(const Int& a, const Int& b) {
  return Int(boost::multiprecision::gcd(a.rep(), b.rep()));
}

inline Int lcm(const Int& a, const Int& b) {
  return Int(boost::multiprecision::lcm(a.rep(), b.rep()));
}

/// Exact division; throws InternalError when b does not divide a. Used where
/// divisibility is guaranteed by construction (Bareiss minors, Smith-basis
/// coordinate solves).
inline Int div_exact(const Int& a, const Int& b) {
  if (b.is_zero()) throw InternalError("div_exact: division by zero");
  Int q = a / b;
  if (!(a - q * b).is_zero()) {
    throw InternalError("div_exact: inexact division");
  }
  return q;
}

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

}  // namespace maghyper

namespace Eigen {

template <>
struct NumTraits<maghyper::Int> : GenericNumTraits<maghyper::Int> {
  typedef maghyper::Int Real;
  typedef maghyper::Int NonInteger;
  typedef maghyper::Int Nested;
  typedef maghyper::Int Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60
  };
};

}  // namespace Eigen
