#pragma once

#include <string>
#include <variant>

#include "pwcycles/affine_map.hpp"
#include "pwcycles/poly/bivariate.hpp"
#include "pwcycles/poly/rational_function.hpp"

namespace pwc {

/// Linear center in normal form
///   x' = -A x - (4A^2 + omega^2)/(4D) y + B,   y' = D x + A y + C,
/// with D > 0 and omega > 0.
struct LinearCenter {
  Rational A = 0, B = 0, C = 0, D = 1, omega = 1;
  friend bool operator==(const LinearCenter&, const LinearCenter&) = default;
};

/// The four cubic isochronous centers with homogeneous nonlinearities.
enum class CubicCenter { S1, S2, S3, S4 };

using CenterFamily = std::variant<LinearCenter, CubicCenter>;

enum class FamilyKind { Lc, S1, S2, S3, S4 };

inline FamilyKind kind_of(const CenterFamily& f) {
  if (std::holds_alternative<LinearCenter>(f)) return FamilyKind::Lc;
  switch (std::get<CubicCenter>(f)) {
    case CubicCenter::S1: return FamilyKind::S1;
    case CubicCenter::S2: return FamilyKind::S2;
    case CubicCenter::S3: return FamilyKind::S3;
    case CubicCenter::S4: return FamilyKind::S4;
  }
  return FamilyKind::S1;
}

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Lc: return "Lc";
    case FamilyKind::S1: return "S1";
    case FamilyKind::S2: return "S2";
    case FamilyKind::S3: return "S3";
    case FamilyKind::S4: return "S4";
  }
  return "?";
}

inline void validate_family(const CenterFamily& f) {
  if (const auto* lc = std::get_if<LinearCenter>(&f)) {
    if (lc->D <= 0) throw InvalidParameters("linear center requires D > 0");
    if (lc->omega <= 0) throw InvalidParameters("linear center requires omega > 0");
  }
}

/// One half-system: a base family, the affine map carrying it to the plane of
/// the piecewise system, and the sign of time.
struct CenterSpec {
  CenterFamily family = CubicCenter::S1;
  AffineMap map;
  int time_sign = 1;

  void validate(const std::string& label = "center") const {
    validate_family(family);
    map.validate(label + " map");
    if (time_sign != 1 && time_sign != -1) throw InvalidParameters(label + ": time_sign must be +1 or -1");
  }
  FamilyKind kind() const { return kind_of(family); }
};

/// Right-hand sides of x' = P(x, y), y' = Q(x, y).
struct VectorFieldPair {
  BivariatePolynomial P;
  BivariatePolynomial Q;
  friend bool operator==(const VectorFieldPair&, const VectorFieldPair&) = default;
};

namespace detail {
using B = BivariatePolynomial;
inline B X(const Rational& c = 1, int i = 1, int j = 0) { return B::monomial(c, i, j); }
}  // namespace detail

inline VectorFieldPair base_field(const CenterFamily& family) {
  using detail::B;
  using detail::X;
  validate_family(family);
  if (const auto* lc = std::get_if<LinearCenter>(&family)) {
    const Rational k = (4 * lc->A * lc->A + lc->omega * lc->omega) / (4 * lc->D);
    return {X(-lc->A, 1, 0) + X(-k, 0, 1) + B::constant(lc->B),
            X(lc->D, 1, 0) + X(lc->A, 0, 1) + B::constant(lc->C)};
  }
  switch (std::get<CubicCenter>(family)) {
    case CubicCenter::S1:
      return {X(-1, 0, 1) + X(1, 3, 0) + X(-1, 1, 2), X(1, 1, 0) + X(1, 2, 1) + X(-1, 0, 3)};
    case CubicCenter::S2:
      return {X(-1, 0, 1) + X(1, 3, 0) + X(-3, 1, 2), X(1, 1, 0) + X(3, 2, 1) + X(-1, 0, 3)};
    case CubicCenter::S3:
      return {X(-1, 0, 1) + X(3, 2, 1), X(1, 1, 0) + X(-2, 3, 0) + X(9, 1, 2)};
    case CubicCenter::S4:
      return {X(-1, 0, 1) + X(-3, 2, 1), X(1, 1, 0) + X(2, 3, 0) + X(-9, 1, 2)};
  }
  return {};
}

inline RationalFunction base_integral(const CenterFamily& family) {
  using detail::B;
  using detail::X;
  validate_family(family);
  if (const auto* lc = std::get_if<LinearCenter>(&family)) {
    // 4 (D x + A y)^2 + 8 D (C x - B y) + omega^2 y^2
    B lin = X(lc->D, 1, 0) + X(lc->A, 0, 1);
    B h = Rational(4) * lin.pow(2) + Rational(8 * lc->D) * (X(lc->C, 1, 0) + X(-lc->B, 0, 1)) +
          X(lc->omega * lc->omega, 0, 2);
    return RationalFunction(h);
  }
  const B r2 = X(1, 2, 0) + X(1, 0, 2);
  switch (std::get<CubicCenter>(family)) {
    case CubicCenter::S1: return RationalFunction(r2, B::constant(1) + X(2, 1, 1));
    case CubicCenter::S2: return RationalFunction(r2.pow(2), B::constant(1) + X(4, 1, 1));
    case CubicCenter::S3:
      return RationalFunction(r2 + X(-4, 4, 0) + X(4, 6, 0), (B::constant(-1) + X(3, 2, 0)).pow(3));
    case CubicCenter::S4:
      return RationalFunction(r2 + X(4, 4, 0) + X(4, 6, 0), (B::constant(1) + X(3, 2, 0)).pow(3));
  }
  return {};
}

/// Pushforward of a field under (x, y) = T(X, Y):
/// time_sign * DT^{-1} F(T(X, Y)).
inline VectorFieldPair conjugate(const VectorFieldPair& field, const AffineMap& m, int time_sign = 1) {
  m.validate();
  const auto P = compose_affine(field.P, m);
  const auto Q = compose_affine(field.Q, m);
  const Rational s = Rational(time_sign) / m.determinant();
  return {Rational(s * m.beta) * P - Rational(s * m.b) * Q, Rational(s * m.a) * Q - Rational(s * m.alpha) * P};
}

inline VectorFieldPair conjugated_field(const CenterSpec& spec) {
  spec.validate();
  return conjugate(base_field(spec.family), spec.map, spec.time_sign);
}

inline RationalFunction conjugated_integral(const CenterSpec& spec) {
  spec.validate();
  return base_integral(spec.family).compose(spec.map);
}

struct FirstIntegralCheck {
  bool holds = false;
  /// Numerator of P dH/dx + Q dH/dy over the common denominator D^2.
  BivariatePolynomial residual;
};

/// Exact check that H is constant along the field: with H = N/D the
/// derivative along the flow has numerator
///   P (N_x D - N D_x) + Q (N_y D - N D_y).
inline FirstIntegralCheck verify_first_integral(const VectorFieldPair& field, const RationalFunction& h) {
  const auto& N = h.numerator();
  const auto& D = h.denominator();
  auto dx = N.partial(Var::First) * D - N * D.partial(Var::First);
  auto dy = N.partial(Var::Second) * D - N * D.partial(Var::Second);
  FirstIntegralCheck out;
  out.residual = field.P * dx + field.Q * dy;
  out.holds = out.residual.is_zero();
  return out;
}

inline FirstIntegralCheck verify_first_integral(const CenterSpec& spec) {
  return verify_first_integral(conjugated_field(spec), conjugated_integral(spec));
}

}  // namespace pwc
