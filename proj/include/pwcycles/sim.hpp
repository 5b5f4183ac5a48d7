#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "pwcycles/centers.hpp"

namespace pwc {

/// Half-plane of the piecewise system; the value is the sign of x inside it.
enum class Side : int { Right = 1, Left = -1 };

struct SimOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-11;
  double max_time = 1e3;
  std::size_t max_steps = 1'000'000;
  double bound = 1e8;
  double event_tol = 1e-12;
  double tangency_tol = 1e-13;
  double initial_step = 1e-3;
  double max_step = 0.05;
};

class SimError : public Error {
 public:
  enum class Kind { TangentialStart, WrongDirection, NoReturn, Blowup, StepFailure };
  SimError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline std::string to_string(SimError::Kind k) {
  switch (k) {
    case SimError::Kind::TangentialStart: return "TangentialStart";
    case SimError::Kind::WrongDirection: return "WrongDirection";
    case SimError::Kind::NoReturn: return "NoReturn";
    case SimError::Kind::Blowup: return "Blowup";
    case SimError::Kind::StepFailure: return "StepFailure";
  }
  return "?";
}

/// VectorFieldPair with coefficients lowered to doubles for fast evaluation.
class CompiledField {
 public:
  explicit CompiledField(const VectorFieldPair& f) : p_(lower(f.P)), q_(lower(f.Q)) {}

  std::array<double, 2> operator()(double x, double y) const { return {eval(p_, x, y), eval(q_, x, y)}; }
  double dx(double x, double y) const { return eval(p_, x, y); }

  /// Sum of |terms| of the x-component, the natural scale for tangency tests.
  double dx_magnitude(double x, double y) const {
    double s = 0;
    for (const auto& t : p_) s += std::fabs(t.c * ipow(x, t.i) * ipow(y, t.j));
    return s;
  }

 private:
  struct Term {
    double c;
    int i, j;
  };
  static std::vector<Term> lower(const BivariatePolynomial& p) {
    std::vector<Term> out;
    for (const auto& [e, v] : p.terms()) out.push_back({to_double(v), e.first, e.second});
    return out;
  }
  static double ipow(double b, int e) {
    double r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
  }
  static double eval(const std::vector<Term>& ts, double x, double y) {
    double s = 0;
    for (const auto& t : ts) s += t.c * ipow(x, t.i) * ipow(y, t.j);
    return s;
  }
  std::vector<Term> p_, q_;
};

struct OrbitSample {
  double t, x, y;
};

/// Arc of an orbit inside one half-plane, from (0, y0) to the first return
/// (0, y_end). The terminal sample is snapped onto x = 0.
struct HalfOrbit {
  std::vector<OrbitSample> samples;
  double y_end = 0;
  double t_end = 0;
  Side side = Side::Right;
  std::size_t steps = 0;
};

/// Integrates from (0, y0) into `side` with an adaptive Dormand-Prince 5(4)
/// stepper and stops at the first return to x = 0, located by bisection on the
/// dense output.
inline HalfOrbit integrate_half(const CompiledField& field, double y0, Side side, const SimOptions& opts = {}) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 2>;
  const double s = static_cast<double>(static_cast<int>(side));

  const double dx0 = field.dx(0.0, y0);
  if (std::fabs(dx0) <= opts.tangency_tol * std::max(1.0, field.dx_magnitude(0.0, y0)))
    throw SimError(SimError::Kind::TangentialStart, "x-velocity vanishes at the start point");
  if (dx0 * s < 0) throw SimError(SimError::Kind::WrongDirection, "field points out of the requested side");

  auto rhs = [&field](const State& u, State& du, double) {
    auto f = field(u[0], u[1]);
    du[0] = f[0];
    du[1] = f[1];
  };
  // Error control on the state alone (a_dxdt = 0): the default checker also
  // scales by dt * |dx/dt|, which loosens control on fast, far-out arcs.
  using Dopri = odeint::runge_kutta_dopri5<State>;
  using Controlled = odeint::controlled_runge_kutta<Dopri, odeint::default_error_checker<double, odeint::array_algebra,
                                                                                         odeint::default_operations>>;
  using Dense = odeint::dense_output_runge_kutta<Controlled>;
  Dense stepper(Controlled(typename Controlled::error_checker_type(opts.abs_tol, opts.rel_tol, 1.0, 0.0),
                           typename Controlled::step_adjuster_type(opts.max_step)));
  stepper.initialize(State{0.0, y0}, 0.0, opts.initial_step);

  HalfOrbit orbit;
  orbit.side = side;
  orbit.samples.push_back({0.0, 0.0, y0});
  while (true) {
    std::pair<double, double> span;
    try {
      span = stepper.do_step(rhs);
    } catch (const std::exception& e) {
      throw SimError(SimError::Kind::StepFailure, std::string("integrator failure: ") + e.what());
    }
    ++orbit.steps;
    const State& u = stepper.current_state();
    if (!std::isfinite(u[0]) || !std::isfinite(u[1]) || std::hypot(u[0], u[1]) > opts.bound)
      throw SimError(SimError::Kind::Blowup, "orbit left the bounded region");

    if (s * u[0] <= 0) {
      // Crossed (or touched) x = 0 during [t0, t1].
      double lo = span.first, hi = span.second;
      State mid = u;
      double tm = hi;
      if (u[0] != 0) {
        for (int it = 0; it < 200; ++it) {
          tm = 0.5 * (lo + hi);
          stepper.calc_state(tm, mid);
          if (std::fabs(mid[0]) <= opts.event_tol) break;
          if (s * mid[0] > 0)
            lo = tm;
          else
            hi = tm;
          if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(hi))) break;
        }
      }
      orbit.t_end = tm;
      orbit.y_end = mid[1];
      orbit.samples.push_back({tm, 0.0, mid[1]});
      return orbit;
    }
    orbit.samples.push_back({span.second, u[0], u[1]});
    if (span.second > opts.max_time || orbit.steps >= opts.max_steps)
      throw SimError(SimError::Kind::NoReturn, "no return to x = 0 within the time/step cap");
  }
}

inline HalfOrbit integrate_half(const VectorFieldPair& field, double y0, Side side, const SimOptions& opts = {}) {
  return integrate_half(CompiledField(field), y0, side, opts);
}

/// Ordinate of the first return to x = 0.
inline double half_return_map(const VectorFieldPair& field, Side side, double y0, const SimOptions& opts = {}) {
  return integrate_half(field, y0, side, opts).y_end;
}

}  // namespace pwc
