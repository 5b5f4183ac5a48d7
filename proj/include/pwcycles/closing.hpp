#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwcycles/centers.hpp"
#include "pwcycles/poly/interval.hpp"
#include "pwcycles/poly/real_roots.hpp"
#include "pwcycles/poly/resultant.hpp"

namespace pwc {

/// Two half-systems glued along x = 0: `right` governs x >= 0 and `left`
/// governs x <= 0.
struct PiecewiseSystem {
  CenterSpec right;
  CenterSpec left;

  void validate() const {
    right.validate("right");
    left.validate("left");
  }
};

/// A first integral restricted to the line x = 0: h(y) = num(y) / den(y),
/// reduced by their gcd so that roots of `den` are genuine poles.
struct LineIntegral {
  UnivariatePolynomial num;
  UnivariatePolynomial den;

  double operator()(double y) const { return num(y) / den(y); }
};

inline LineIntegral restrict_to_line(const RationalFunction& h) {
  auto num = h.numerator().fix(Var::First, 0);
  auto den = h.denominator().fix(Var::First, 0);
  if (den.is_zero()) throw DegenerateInput("first integral is undefined along x = 0");
  auto g = gcd(num, den);
  if (!num.is_zero() && g.degree() > 0) {
    num = exact_divide(num, g);
    den = exact_divide(den, g);
  }
  return {std::move(num), std::move(den)};
}

/// Closing equations in (y1, y2) after clearing denominators and removing the
/// (y1 - y2) factor. F1 comes from the right half and F2 from the left.
struct ClosingSystem {
  BivariatePolynomial F1, F2;
  UnivariatePolynomial D1, D2;
  LineIntegral h_right, h_left;
  int degree1 = -1, degree2 = -1;
  std::optional<std::pair<BivariatePolynomial, BivariatePolynomial>> symmetric_form;
  bool continuum = false;
  bool identical_integrals = false;

  /// Both symmetric forms depend on z = y1 + y2 alone.
  bool w_free() const {
    return symmetric_form && symmetric_form->first.degree_in(Var::Second) <= 0 &&
           symmetric_form->second.degree_in(Var::Second) <= 0;
  }
};

namespace detail {

inline BivariatePolynomial cross_difference(const LineIntegral& h) {
  // num(y1) den(y2) - num(y2) den(y1)
  using B = BivariatePolynomial;
  B n1 = B::from_univariate(h.num, Var::First), n2 = B::from_univariate(h.num, Var::Second);
  B d1 = B::from_univariate(h.den, Var::First), d2 = B::from_univariate(h.den, Var::Second);
  return n1 * d2 - n2 * d1;
}

inline bool proportional(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

inline void finish(ClosingSystem& cs) {
  cs.degree1 = cs.F1.degree();
  cs.degree2 = cs.F2.degree();
  cs.identical_integrals = proportional(cs.F1, cs.F2);
  cs.continuum = cs.F1.is_zero() || cs.F2.is_zero() || cs.identical_integrals;
  if (cs.F1.is_symmetric() && cs.F2.is_symmetric())
    cs.symmetric_form = std::pair{symmetric_reduce(cs.F1), symmetric_reduce(cs.F2)};
}

}  // namespace detail

inline ClosingSystem build_closing_system(const PiecewiseSystem& pw) {
  pw.validate();
  ClosingSystem cs;
  cs.h_right = restrict_to_line(conjugated_integral(pw.right));
  cs.h_left = restrict_to_line(conjugated_integral(pw.left));
  cs.D1 = cs.h_right.den.primitive();
  cs.D2 = cs.h_left.den.primitive();

  auto reduce = [](const LineIntegral& h) {
    auto cross = detail::cross_difference(h);
    if (!cross.diagonal().is_zero()) throw DiagonalNotVanishing(cross.to_string({"y1", "y2"}));
    if (cross.is_zero()) return BivariatePolynomial{};
    return factor_out_difference(cross).normalized();
  };
  cs.F1 = reduce(cs.h_right);
  cs.F2 = reduce(cs.h_left);
  detail::finish(cs);
  return cs;
}

/// Closing system given directly by its two equations, with no poles and
/// zero level functions; for solving arbitrary symmetric systems.
inline ClosingSystem closing_system_from(BivariatePolynomial F1, BivariatePolynomial F2) {
  ClosingSystem cs;
  const UnivariatePolynomial one({Rational(1)});
  cs.h_right = cs.h_left = {UnivariatePolynomial{}, one};
  cs.D1 = cs.D2 = one;
  cs.F1 = std::move(F1);
  cs.F2 = std::move(F2);
  detail::finish(cs);
  return cs;
}

struct BezoutBound {
  enum class Form { Pairs, Symmetric, WFree };
  long raw_product = 0;
  long cycle_bound = 0;
  /// deg P1 * deg P2 of the (z, w) form, or -1 without one.
  long symmetric_product = -1;
  Form form = Form::Pairs;
};

inline std::string form_name(BezoutBound::Form f) {
  switch (f) {
    case BezoutBound::Form::Pairs: return "y1y2";
    case BezoutBound::Form::Symmetric: return "zw";
    case BezoutBound::Form::WFree: return "w_free";
  }
  return "?";
}

/// Bezout bound on isolated closing solutions and on the number of crossing
/// cycles. The (y1, y2) product is halved for the mirror pairs; a (z, w)
/// solution is already an unordered pair. The smaller cycle bound wins.
inline BezoutBound bezout_bound(const ClosingSystem& cs) {
  if (cs.continuum) throw ContinuumDetected();
  BezoutBound out;
  const long pairs = static_cast<long>(std::max(cs.degree1, 0)) * std::max(cs.degree2, 0);
  out.raw_product = pairs;
  out.cycle_bound = pairs / 2;
  if (!cs.symmetric_form) return out;
  const long zw = static_cast<long>(std::max(cs.symmetric_form->first.degree(), 0)) *
                  std::max(cs.symmetric_form->second.degree(), 0);
  out.symmetric_product = zw;
  if (cs.w_free()) {
    // Every common zero in z is a whole line of pairs, never an isolated one.
    out.form = BezoutBound::Form::WFree;
    out.raw_product = zw;
    out.cycle_bound = 0;
  } else if (zw < out.cycle_bound) {
    out.form = BezoutBound::Form::Symmetric;
    out.raw_product = zw;
    out.cycle_bound = zw;
  }
  return out;
}

/// A real solution (y1, y2), y1 < y2, of the closing equations.
struct CandidatePair {
  double y1 = 0, y2 = 0;
  RealRoot root1, root2;  // exact isolating data
  double level_right = 0, level_left = 0;
  double residual1 = 0, residual2 = 0;  // |F1|, |F2| at (y1, y2), exact evaluation
  double scaled_residual1 = 0, scaled_residual2 = 0;
  bool at_pole = false;
};

struct ClosingOptions {
  double tol_algebraic = 1e-10;
};

struct ClosingSolution {
  std::vector<CandidatePair> candidates;
  /// Candidates sitting on a pole of either integral (the level curves there
  /// are not closed orbits).
  std::vector<CandidatePair> pole_rejected;
  /// Squarefree eliminants whose roots carry the y1 and y2 coordinates.
  UnivariatePolynomial eliminant1, eliminant2;
};

namespace detail {

/// Eliminates the first variable using a polynomial of degree one in it:
/// lin = a(v) u + b(v). Returns other(-b/a, v) * a^deg, which has the same
/// roots as the resultant.
inline UnivariatePolynomial eliminate_by_substitution(const BivariatePolynomial& lin,
                                                      const BivariatePolynomial& other) {
  auto lc = lin.coefficients_in(Var::First);
  const auto& a = lc[1];
  const auto nb = -lc[0];
  auto oc = other.coefficients_in(Var::First);
  const int n = static_cast<int>(oc.size()) - 1;
  UnivariatePolynomial acc;
  for (int k = 0; k <= n; ++k)
    acc += oc[static_cast<std::size_t>(k)] * nb.pow(static_cast<unsigned>(k)) * a.pow(static_cast<unsigned>(n - k));
  return acc;
}

/// Eliminant in the second variable: its roots are the y2-coordinates.
inline UnivariatePolynomial eliminate_first(const BivariatePolynomial& f1, const BivariatePolynomial& f2) {
  if (f1.degree_in(Var::First) == 1) return eliminate_by_substitution(f1, f2);
  if (f2.degree_in(Var::First) == 1) return eliminate_by_substitution(f2, f1);
  return resultant(f1, f2, Var::First);
}

/// True iff the algebraic number isolated by `root` (a root of `eliminant`)
/// is also a root of `den`.
inline bool is_pole(const RealRoot& root, const UnivariatePolynomial& eliminant, const UnivariatePolynomial& den) {
  if (den.degree() <= 0) return false;
  if (root.exact()) return den(root.lo) == 0;
  auto g = gcd(eliminant, den);
  if (g.degree() <= 0) return false;
  return SturmSequence(g).count_roots(root.lo, root.hi) > 0;
}

/// Certifies root(a) < root(b) from isolating data alone.
inline bool strictly_below(const RealRoot& a, const RealRoot& b) {
  if (b.exact()) return a.hi < b.lo || (a.exact() && a.lo < b.lo);
  return a.hi <= b.lo;
}

inline double scaled_residual(const BivariatePolynomial& f, double u, double v, double& absolute) {
  const Rational ur = rational_from_double(u), vr = rational_from_double(v);
  absolute = std::fabs(to_double(f(ur, vr)));
  double scale = 0;
  for (const auto& [e, c] : f.terms())
    scale += std::fabs(to_double(c)) * std::pow(std::fabs(u), e.first) * std::pow(std::fabs(v), e.second);
  return scale > 0 ? absolute / scale : absolute;
}

}  // namespace detail

/// Real solutions with y1 < y2. Eliminates y1 (by direct substitution when a
/// closing polynomial is linear in it, otherwise via the Sylvester
/// resultant), isolates the real roots exactly, and keeps the root pairs
/// whose exact interval enclosure of both F1 and F2 contains zero.
inline ClosingSolution solve_closing(const ClosingSystem& cs, ClosingOptions opts = {}) {
  if (cs.continuum) throw ContinuumDetected();
  ClosingSolution out;
  if (cs.F1.degree() <= 0 || cs.F2.degree() <= 0) return out;  // a nonzero constant: no solutions

  if (cs.w_free()) {
    auto p1 = cs.symmetric_form->first.fix(Var::Second, 0);
    auto p2 = cs.symmetric_form->second.fix(Var::Second, 0);
    if (gcd(p1, p2).degree() > 0) throw ContinuumDetected();
    return out;
  }

  auto r2 = detail::eliminate_first(cs.F1, cs.F2);
  if (r2.is_zero()) throw ContinuumDetected();
  const bool symmetric = cs.symmetric_form.has_value();
  auto r1 = symmetric ? r2 : detail::eliminate_first(cs.F1.swapped(), cs.F2.swapped());
  if (r1.is_zero()) throw ContinuumDetected();
  if (r2.degree() <= 0 || r1.degree() <= 0) return out;
  out.eliminant1 = squarefree_part(r1);
  out.eliminant2 = squarefree_part(r2);

  const RootOptions full{0.0};
  const auto roots2 = real_roots(out.eliminant2, full);
  const auto roots1 = symmetric ? roots2 : real_roots(out.eliminant1, full);

  auto encloses_zero = [](const BivariatePolynomial& f, const RealRoot& a, const RealRoot& b) {
    return f.evaluate(RationalInterval(a), RationalInterval(b)).contains_zero();
  };

  auto consider = [&](const RealRoot& a, const RealRoot& b) {
    if (!encloses_zero(cs.F1, a, b) || !encloses_zero(cs.F2, a, b)) return;
    CandidatePair c;
    c.root1 = a;
    c.root2 = b;
    c.y1 = a.value;
    c.y2 = b.value;
    c.scaled_residual1 = detail::scaled_residual(cs.F1, c.y1, c.y2, c.residual1);
    c.scaled_residual2 = detail::scaled_residual(cs.F2, c.y1, c.y2, c.residual2);
    if (c.scaled_residual1 > opts.tol_algebraic || c.scaled_residual2 > opts.tol_algebraic) return;
    c.at_pole = detail::is_pole(a, out.eliminant1, cs.D1) || detail::is_pole(a, out.eliminant1, cs.D2) ||
                detail::is_pole(b, out.eliminant2, cs.D1) || detail::is_pole(b, out.eliminant2, cs.D2);
    if (!c.at_pole) {
      c.level_right = cs.h_right(c.y1);
      c.level_left = cs.h_left(c.y1);
    }
    (c.at_pole ? out.pole_rejected : out.candidates).push_back(std::move(c));
  };

  if (symmetric) {
    // One root list serves both coordinates; i < j canonicalizes the mirror.
    for (std::size_t i = 0; i < roots1.size(); ++i)
      for (std::size_t j = i + 1; j < roots2.size(); ++j) consider(roots1[i], roots2[j]);
  } else {
    for (const auto& a : roots1)
      for (const auto& b : roots2)
        if (detail::strictly_below(a, b)) consider(a, b);
  }
  return out;
}

}  // namespace pwc
