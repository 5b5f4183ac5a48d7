#pragma once

#include <cmath>
#include <vector>

#include "pwcycles/poly/univariate.hpp"

namespace pwc {

/// One real root, isolated in the half-open interval (lo, hi] (or exactly
/// equal to lo == hi), with `value` the nearest double to the midpoint.
struct RealRoot {
  Rational lo;
  Rational hi;
  double value = 0.0;

  bool exact() const { return lo == hi; }
  bool contains(const Rational& r) const { return exact() ? r == lo : (lo < r && r <= hi); }
};

/// Sturm chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Each member is
/// rescaled by a positive constant only, which keeps sign counts intact.
class SturmSequence {
 public:
  explicit SturmSequence(const UnivariatePolynomial& p) {
    if (p.is_zero()) return;
    chain_.push_back(p.positive_primitive());
    auto d = p.derivative();
    if (d.is_zero()) return;
    chain_.push_back(d.positive_primitive());
    while (true) {
      auto r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back((-r).positive_primitive());
    }
  }

  const std::vector<UnivariatePolynomial>& chain() const { return chain_; }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sgn(q(x)));
    return count(signs);
  }
  int variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
      int s = sgn(q.leading());
      if (!positive && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
    return count(signs);
  }

  /// Number of distinct real roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

 private:
  static int count(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
  std::vector<UnivariatePolynomial> chain_;
};

/// Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two so that
/// bisection midpoints stay dyadic.
inline Rational cauchy_bound(const UnivariatePolynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(k) / p.leading());
    if (r > m) m = r;
  }
  Rational bound = m + 1;
  Rational pow2 = 1;
  while (pow2 < bound) pow2 *= 2;
  return pow2;
}

struct RootOptions {
  /// Target interval width. Zero or negative refines until the interval
  /// cannot be resolved further in double precision.
  double tol = 1e-12;
};

namespace detail {

inline bool resolved(const Rational& lo, const Rational& hi, double tol) {
  if (tol > 0) return Rational(hi - lo) <= rational_from_double(tol);
  double a = to_double(lo), b = to_double(hi);
  return a == b || std::nextafter(a, b) == b;
}

/// Shrinks an isolating interval (lo, hi] of a squarefree polynomial.
inline RealRoot refine(const UnivariatePolynomial& q, const SturmSequence& sturm, Rational lo, Rational hi,
                       double tol) {
  int s_lo = sgn(q(lo));
  if (sgn(q(hi)) == 0) return {hi, hi, to_double(hi)};
  while (!resolved(lo, hi, tol)) {
    Rational mid = (lo + hi) / 2;
    int s_mid = sgn(q(mid));
    if (s_mid == 0) return {mid, mid, to_double(mid)};
    if (s_lo != 0) {
      // Simple root: sign bisection.
      if (s_mid == s_lo)
        lo = mid;
      else
        hi = mid;
    } else {
      // lo is itself a (different) root; fall back on Sturm counts.
      if (sturm.count_roots(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
        s_lo = s_mid;
      }
    }
  }
  Rational mid = (lo + hi) / 2;
  return {lo, hi, to_double(mid)};
}

}  // namespace detail

/// Distinct real roots of p in ascending order. Works on the squarefree part,
/// isolates with Sturm counts inside the Cauchy bound, then bisects each
/// isolating interval down to `opts.tol`.
inline std::vector<RealRoot> real_roots(const UnivariatePolynomial& p, RootOptions opts = {}) {
  if (p.is_zero()) throw DegenerateInput("real roots of the zero polynomial");
  std::vector<RealRoot> out;
  if (p.degree() <= 0) return out;
  const auto q = squarefree_part(p);
  const SturmSequence sturm(q);
  const Rational bound = cauchy_bound(q);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count_roots(-bound, bound)}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      isolated.emplace_back(cur.lo, cur.hi);
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    int left = sturm.count_roots(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(isolated.begin(), isolated.end());
  out.reserve(isolated.size());
  for (auto& [lo, hi] : isolated) out.push_back(detail::refine(q, sturm, lo, hi, opts.tol));
  return out;
}

}  // namespace pwc
