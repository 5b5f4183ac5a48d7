#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pwcycles/poly/bivariate.hpp"

namespace pwc {

/// Determinant of a square matrix over Q[t] by fraction-free (Bareiss)
/// elimination; every division is exact in Q[t].
inline UnivariatePolynomial bareiss_determinant(std::vector<std::vector<UnivariatePolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UnivariatePolynomial::constant(1);
  bool negate = false;
  UnivariatePolynomial prev = UnivariatePolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Resultant of p and q with respect to `eliminate`, as a polynomial in the
/// remaining variable: the Sylvester determinant with p's rows first. A zero
/// result means p and q share a factor of positive degree in `eliminate`.
inline UnivariatePolynomial resultant(const BivariatePolynomial& p, const BivariatePolynomial& q, Var eliminate) {
  if (p.is_zero() || q.is_zero()) throw DegenerateInput("resultant of the zero polynomial");
  const auto pc = p.coefficients_in(eliminate);
  const auto qc = q.coefficients_in(eliminate);
  const int m = static_cast<int>(pc.size()) - 1;
  const int n = static_cast<int>(qc.size()) - 1;
  // Res(c, q) = c^deg q for a polynomial constant in the eliminated variable.
  if (m == 0) return pc[0].pow(static_cast<unsigned>(n));
  if (n == 0) return qc[0].pow(static_cast<unsigned>(m));

  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UnivariatePolynomial>> s(size, std::vector<UnivariatePolynomial>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + m - k)] = pc[static_cast<std::size_t>(k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + n - k)] = qc[static_cast<std::size_t>(k)];
  return bareiss_determinant(std::move(s));
}

}  // namespace pwc
