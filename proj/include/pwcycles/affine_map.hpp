#pragma once

#include <string>

#include "pwcycles/errors.hpp"
#include "pwcycles/rational.hpp"

namespace pwc {

/// Invertible affine change of variables
///   x = a X + b Y + c,   y = alpha X + beta Y + gamma,
/// taking the new coordinates (X, Y) to the coordinates (x, y) in which a
/// base center is written.
struct AffineMap {
  Rational a = 1, b = 0, c = 0;
  Rational alpha = 0, beta = 1, gamma = 0;

  static AffineMap identity() { return {}; }
  static AffineMap translation(const Rational& dx, const Rational& dy) { return {1, 0, dx, 0, 1, dy}; }

  Rational determinant() const { return a * beta - b * alpha; }
  bool invertible() const { return determinant() != 0; }

  void validate(const std::string& label = "map") const {
    if (!invertible()) throw SingularMap(label + ": a*beta - b*alpha = 0");
  }

  AffineMap inverse() const {
    validate();
    const Rational d = determinant();
    const Rational ia = beta / d, ib = -b / d, ialpha = -alpha / d, ibeta = a / d;
    return {ia, ib, -(ia * c + ib * gamma), ialpha, ibeta, -(ialpha * c + ibeta * gamma)};
  }

  /// (this ∘ inner)(X, Y) = this(inner(X, Y)).
  AffineMap after(const AffineMap& inner) const {
    return {a * inner.a + b * inner.alpha,
            a * inner.b + b * inner.beta,
            a * inner.c + b * inner.gamma + c,
            alpha * inner.a + beta * inner.alpha,
            alpha * inner.b + beta * inner.beta,
            alpha * inner.c + beta * inner.gamma + gamma};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

}  // namespace pwc
