#include "maghyper/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace maghyper {

// ---------------------------------------------------------------------------
// HalfPoly

HalfPoly::HalfPoly(const Int& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

HalfPoly HalfPoly::from_coeffs(std::vector<Int> ascending) {
  HalfPoly p;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

HalfPoly HalfPoly::monomial(int exponent, const Int& coeff) {
  if (exponent < 0) throw InternalError("monomial exponent must be >= 0");
  HalfPoly p;
  if (!coeff.is_zero()) {
    p.c_.assign(exponent + 1, Int(0));
    p.c_.back() = coeff;
  }
  return p;
}

Int HalfPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return Int(0);
  return c_[exponent];
}

const Int& HalfPoly::leading() const {
  if (c_.empty()) throw InternalError("zero polynomial has no leading term");
  return c_.back();
}

Int HalfPoly::content() const {
  Int g(0);
  for (const Int& x : c_) g = gcd(g, x);
  return g;
}

void HalfPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HalfPoly HalfPoly::operator-() const {
  HalfPoly out = *this;
  for (Int& x : out.c_) x = -x;
  return out;
}

HalfPoly& HalfPoly::operator+=(const HalfPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

HalfPoly& HalfPoly::operator-=(const HalfPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

HalfPoly operator*(const HalfPoly& a, const HalfPoly& b) {
  if (a.is_zero() || b.is_zero()) return HalfPoly();
  HalfPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

HalfPoly& HalfPoly::operator*=(const HalfPoly& o) { return *this = *this * o; }

HalfPoly HalfPoly::scaled(const Int& s) const {
  if (s.is_zero()) return HalfPoly();
  HalfPoly out = *this;
  for (Int& x : out.c_) x *= s;
  return out;
}

HalfPoly HalfPoly::divided(const Int& s) const {
  HalfPoly out = *this;
  for (Int& x : out.c_) x = div_exact(x, s);
  return out;
}

std::string HalfPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const Int& c = c_[e];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) os << "-";
    first = false;
    const Int mag = abs(c);
    if (e == 0 || mag != Int(1)) os << mag.str();
    if (e >= 1) os << "x";
    if (e >= 2) os << "^" << e;
  }
  return os.str();
}

HalfPoly divide_exact(const HalfPoly& a, const HalfPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.is_zero()) return HalfPoly();
  if (a.degree() < b.degree()) {
    throw InternalError("inexact polynomial division (degree)");
  }
  std::vector<Int> rem(a.coeffs());
  std::vector<Int> quo(a.degree() - b.degree() + 1, Int(0));
  for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
    const Int& top = rem[k + b.degree()];
    if (top.is_zero()) continue;
    const Int q = div_exact(top, b.leading());
    quo[k] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= q * b.coeff(j);
  }
  for (const Int& r : rem) {
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
  }
  return HalfPoly::from_coeffs(std::move(quo));
}

namespace {

/// Pseudo-remainder: leading(b)^(deg a - deg b + 1) * a mod b, for deg a >=
/// deg b > -1. Stays in Z[x] without any divisions.
HalfPoly pseudo_rem(const HalfPoly& a, const HalfPoly& b) {
  HalfPoly r = a;
  const int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    const HalfPoly lead = HalfPoly::monomial(shift, r.leading());
    r = r.scaled(b.leading()) - lead * b;
  }
  return r;
}

HalfPoly primitive_part(const HalfPoly& p) {
  if (p.is_zero()) return p;
  HalfPoly out = p.divided(p.content());
  if (out.leading().sign() < 0) out = -out;
  return out;
}

}  // namespace

HalfPoly poly_gcd(HalfPoly a, HalfPoly b) {
  if (a.is_zero()) return b.leading().sign() < 0 ? -b : b;
  if (b.is_zero()) return a.leading().sign() < 0 ? -a : a;
  const Int content = gcd(a.content(), b.content());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    HalfPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(content);
}

// ---------------------------------------------------------------------------
// HalfSeries

HalfSeries HalfSeries::zeros(int order) {
  HalfSeries s;
  s.order = order;
  s.coeffs.assign(order + 1, Int(0));
  return s;
}

std::string HalfSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int e = 0; e <= order; ++e) {
    const Int& c = coeffs[e];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    if (first && c.sign() < 0) os << "-";
    first = false;
    const Int mag = abs(c);
    if (e == 0 || mag != Int(1)) os << mag.str();
    if (e >= 1) os << "x";
    if (e >= 2) os << "^" << e;
  }
  if (first) os << "0";
  os << " + O(x^" << order + 1 << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(HalfPoly num, HalfPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InputError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = HalfPoly(1);
    return;
  }
  const HalfPoly g = poly_gcd(num_, den_);
  num_ = divide_exact(num_, g);
  den_ = divide_exact(den_, g);
  const Int c = gcd(num_.content(), den_.content());
  if (c != Int(1)) {
    num_ = num_.divided(c);
    den_ = den_.divided(c);
  }
  if (den_.leading().sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw InputError("division by the zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFn::str() const {
  if (den_ == HalfPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// series_expand

HalfSeries series_expand(const RationalFn& r, int order) {
  if (order < 0) throw InputError("series order must be >= 0");
  const Int d0 = r.den().coeff(0);
  if (d0.is_zero()) {
    throw InputError("series expansion needs a denominator nonzero at x = 0");
  }
  HalfSeries s = HalfSeries::zeros(order);
  for (int k = 0; k <= order; ++k) {
    Int acc = r.num().coeff(k);
    for (int i = 1; i <= k; ++i) acc -= r.den().coeff(i) * s.coeffs[k - i];
    if (!(acc % d0).is_zero()) {
      throw InputError("series expansion has a non-integer coefficient at x^" +
                       std::to_string(k));
    }
    s.coeffs[k] = acc / d0;
  }
  return s;
}

// ---------------------------------------------------------------------------
// linsolve_rational — fraction-free Bareiss elimination, rational back-subst.

std::vector<RationalFn> linsolve_rational(const PolyMatrix& a,
                                          const PolyVector& b) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.size() != n) {
    throw InputError("linsolve: matrix must be square and match the vector");
  }
  if (n == 0) return {};

  // Augmented working copy [A | b].
  PolyMatrix m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;

  HalfPoly prev(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw InputError("linsolve: singular matrix");
    if (pivot != k) m.row(pivot).swap(m.row(k));

    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c <= n; ++c) {
        // Bareiss step: every division here is exact.
        m(r, c) = divide_exact(m(k, k) * m(r, c) - m(r, k) * m(k, c), prev);
      }
      m(r, k) = HalfPoly(0);
    }
    prev = m(k, k);
  }

  std::vector<RationalFn> x(n);
  for (int r = n - 1; r >= 0; --r) {
    RationalFn acc{m(r, n)};
    for (int c = r + 1; c < n; ++c) acc -= RationalFn(m(r, c)) * x[c];
    x[r] = acc / RationalFn(m(r, r));
  }
  return x;
}

}  // namespace maghyper
