#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "pwcycles/poly/real_roots.hpp"

namespace pwc {

/// Closed form of a real algebraic number of degree at most two, proven
/// exactly against the polynomial it was isolated from.
struct ExactForm {
  UnivariatePolynomial minimal;  // primitive, positive leading coefficient
  std::string text;              // "79/3", "(24-√339)/3", "13+√131", ...
};

namespace detail {

/// Best rational approximation with denominator at most `max_den`, by
/// continued fractions; nullopt if none is within `rel_tol`.
inline std::optional<Rational> reconstruct(double v, long max_den = 1'000'000, double rel_tol = 1e-11) {
  if (!std::isfinite(v)) return std::nullopt;
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational x = rational_from_double(v);
  for (int it = 0; it < 64; ++it) {
    Integer a = x.get_num() / x.get_den();  // truncation; fixed below for negatives
    if (a * x.get_den() > x.get_num()) a -= 1;
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    const Rational approx(h1, k1);
    if (std::fabs(to_double(approx) - v) <= rel_tol * std::max(1.0, std::fabs(v))) {
      Rational r = approx;
      r.canonicalize();
      return r;
    }
    Rational frac = x - Rational(a);
    if (frac == 0) break;
    x = 1 / frac;
  }
  return std::nullopt;
}

/// Splits n > 0 as k^2 * r with r free of square factors below `limit`.
inline void split_square(Integer n, Integer& k, Integer& r, unsigned long limit = 100000) {
  k = 1;
  for (unsigned long p = 2; p <= limit && Integer(p) * p <= n; ++p) {
    const Integer pp = Integer(p) * p;
    while (n % pp == 0) {
      n /= pp;
      k *= p;
    }
  }
  r = n;
}

inline std::string render_quadratic(const Rational& s, const Rational& p, int sigma) {
  // y = s/2 + sigma * sqrt(s^2 - 4p) / 2
  const Rational disc = s * s - 4 * p;
  Integer k, r;
  split_square(disc.get_num() * disc.get_den(), k, r);
  const Rational a = s / 2;
  Rational b(k, 2 * disc.get_den());
  b.canonicalize();
  Integer L;
  mpz_lcm(L.get_mpz_t(), Rational(a).get_den_mpz_t(), Rational(b).get_den_mpz_t());
  const Integer A = Rational(a * L).get_num();
  const Integer B = Rational(b * L).get_num();

  std::string out;
  if (A != 0) out += A.get_str();
  if (sigma < 0)
    out += "-";
  else if (A != 0)
    out += "+";
  if (B != 1) out += B.get_str();
  out += "√" + r.get_str();
  if (L != 1) out = (A != 0 ? "(" + out + ")" : out) + "/" + L.get_str();
  return out;
}

}  // namespace detail

/// Tries to prove that the root isolated by `root` has degree one or two over
/// the rationals. `siblings` are the other real roots of `poly`, used as
/// candidate conjugates. Every reported form is checked exactly: the minimal
/// polynomial divides `poly` and has a root inside the isolating interval.
inline std::optional<ExactForm> exact_form(const RealRoot& root, const UnivariatePolynomial& poly,
                                           const std::vector<RealRoot>& siblings) {
  if (root.exact()) return ExactForm{UnivariatePolynomial({-root.lo, 1}).positive_primitive(), to_string(root.lo)};
  if (auto r = detail::reconstruct(root.value); r && poly(*r) == 0 && root.contains(*r))
    return ExactForm{UnivariatePolynomial({-*r, 1}).positive_primitive(), to_string(*r)};

  for (const auto& other : siblings) {
    if (other.lo == root.lo && other.hi == root.hi) continue;
    auto s = detail::reconstruct(root.value + other.value);
    auto p = detail::reconstruct(root.value * other.value);
    if (!s || !p) continue;
    UnivariatePolynomial q({*p, -*s, 1});
    const Rational disc = *s * *s - 4 * *p;
    if (disc <= 0) continue;
    if (!divmod(poly, q).second.is_zero()) continue;
    if (SturmSequence(q).count_roots(root.lo, root.hi) != 1) continue;
    const int sigma = root.value < to_double(*s / 2) ? -1 : 1;
    return ExactForm{q.positive_primitive(), detail::render_quadratic(*s, *p, sigma)};
  }
  return std::nullopt;
}

}  // namespace pwc
