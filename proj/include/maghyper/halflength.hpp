#pragma once

#include <cstdint>
#include <string>

#include "maghyper/errors.hpp"

namespace maghyper {

/// An exact path length valued in (1/2)Z>=0 together with infinity, stored as
/// an integer count of half-units. All arithmetic is integer arithmetic;
/// infinity absorbs addition and compares greater than every finite value.
class HalfLength {
 public:
  /// Zero length.
  constexpr HalfLength() : h2_(0) {}

  static constexpr HalfLength infinity() { return HalfLength(kInf); }
  static HalfLength from_half_units(std::int64_t n) {
    if (n < 0) throw InputError("HalfLength: negative half-unit count");
    return HalfLength(n);
  }
  static constexpr HalfLength zero() { return HalfLength(0); }
  static constexpr HalfLength half() { return HalfLength(1); }
  static constexpr HalfLength one() { return HalfLength(2); }

  constexpr bool is_infinite() const { return h2_ == kInf; }
  constexpr bool is_zero() const { return h2_ == 0; }

  /// Count of half-units; undefined question for infinity.
  std::int64_t half_units() const {
    if (is_infinite()) throw InputError("HalfLength: infinite has no half-unit count");
    return h2_;
  }

  /// Rendered as "0", "1/2", "1", "3/2", ..., "inf".
  std::string str() const {
    if (is_infinite()) return "inf";
    if (h2_ % 2 == 0) return std::to_string(h2_ / 2);
    return std::to_string(h2_) + "/2";
  }

  friend HalfLength operator+(HalfLength a, HalfLength b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return HalfLength(a.h2_ + b.h2_);
  }
  HalfLength& operator+=(HalfLength o) { return *this = *this + o; }

  friend constexpr bool operator==(HalfLength a, HalfLength b) {
    return a.h2_ == b.h2_;
  }
  friend constexpr bool operator!=(HalfLength a, HalfLength b) {
    return !(a == b);
  }
  friend constexpr bool operator<(HalfLength a, HalfLength b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.h2_ < b.h2_;
  }
  friend constexpr bool operator<=(HalfLength a, HalfLength b) {
    return a == b || a < b;
  }
  friend constexpr bool operator>(HalfLength a, HalfLength b) { return b < a; }
  friend constexpr bool operator>=(HalfLength a, HalfLength b) {
    return b <= a;
  }

 private:
  explicit constexpr HalfLength(std::int64_t h2) : h2_(h2) {}

  static constexpr std::int64_t kInf = -1;
  std::int64_t h2_;
};

}  // namespace maghyper
