#pragma once

#include <algorithm>

#include "pwcycles/poly/real_roots.hpp"

namespace pwc {

/// Closed interval of rationals with outward-exact arithmetic (no rounding).
struct RationalInterval {
  Rational lo = 0, hi = 0;

  RationalInterval() = default;
  RationalInterval(const Rational& v) : lo(v), hi(v) {}  // NOLINT(google-explicit-constructor)
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  explicit RationalInterval(const RealRoot& r) : lo(r.lo), hi(r.hi) {}

  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
};

template <>
inline RationalInterval from_rational<RationalInterval>(const Rational& r) {
  return RationalInterval(r);
}

}  // namespace pwc
