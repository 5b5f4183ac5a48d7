#pragma once

// Small hand-rolled generators for property tests. Everything is driven by a
// seeded std::mt19937_64 so failures reproduce from the printed seed.

#include <random>
#include <vector>

#include "pwcycles.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int integer(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline pwc::Rational ratio(Rng& rng, int span = 6, int max_den = 5) {
  pwc::Rational r(integer(rng, -span, span), integer(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline pwc::Rational nonzero_ratio(Rng& rng, int span = 6, int max_den = 5) {
  while (true) {
    auto r = ratio(rng, span, max_den);
    if (r != 0) return r;
  }
}

inline pwc::UnivariatePolynomial univariate(Rng& rng, int degree) {
  std::vector<pwc::Rational> c;
  for (int k = 0; k < degree; ++k) c.push_back(ratio(rng));
  c.push_back(nonzero_ratio(rng));
  return pwc::UnivariatePolynomial(c);
}

/// Random polynomial of total degree at most `degree` with roughly `density`
/// of the monomials present.
inline pwc::BivariatePolynomial bivariate(Rng& rng, int degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  pwc::BivariatePolynomial p;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; i + j <= degree; ++j)
      if (keep(rng)) p += pwc::BivariatePolynomial::monomial(ratio(rng), i, j);
  return p;
}

inline pwc::BivariatePolynomial symmetric(Rng& rng, int degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  pwc::BivariatePolynomial p;
  for (int i = 0; i <= degree; ++i)
    for (int j = i; i + j <= degree; ++j) {
      if (!keep(rng)) continue;
      const auto c = ratio(rng);
      p += pwc::BivariatePolynomial::monomial(c, i, j);
      if (i != j) p += pwc::BivariatePolynomial::monomial(c, j, i);
    }
  return p;
}

inline pwc::AffineMap affine(Rng& rng) { return pwc::random_affine_map(rng); }

inline pwc::CenterSpec center(Rng& rng, pwc::FamilyKind kind) { return pwc::random_center(rng, kind); }

inline constexpr pwc::FamilyKind kAllFamilies[] = {pwc::FamilyKind::Lc, pwc::FamilyKind::S1, pwc::FamilyKind::S2,
                                                   pwc::FamilyKind::S3, pwc::FamilyKind::S4};

}  // namespace gen
