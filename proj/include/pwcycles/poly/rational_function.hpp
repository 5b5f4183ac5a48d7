#pragma once

#include <utility>

#include "pwcycles/poly/bivariate.hpp"

namespace pwc {

/// numerator / denominator with a nonzero denominator. Construction scales
/// both parts so the denominator has coprime integer coefficients and a
/// positive graded-lex leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(BivariatePolynomial::constant(1)) {}
  explicit RationalFunction(BivariatePolynomial numerator,
                            BivariatePolynomial denominator = BivariatePolynomial::constant(1))
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DegenerateInput("rational function with zero denominator");
    normalize();
  }

  const BivariatePolynomial& numerator() const { return num_; }
  const BivariatePolynomial& denominator() const { return den_; }

  template <class T>
  T evaluate(const T& x, const T& y) const {
    return num_.evaluate(x, y) / den_.evaluate(x, y);
  }
  double operator()(double x, double y) const { return evaluate<double>(x, y); }

  /// Both parts pushed through the same affine substitution.
  RationalFunction compose(const AffineMap& m) const {
    return RationalFunction(compose_affine(num_, m), compose_affine(den_, m));
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize() {
    auto scaled = den_.normalized();
    // den_ * s == scaled for a single rational s; recover it from one term.
    const auto& [e, v] = *den_.terms().begin();
    Rational s = scaled.coeff(e.first, e.second) / v;
    den_ = std::move(scaled);
    num_ = s * num_;
  }

  BivariatePolynomial num_;
  BivariatePolynomial den_;
};

}  // namespace pwc
