#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "pwcycles/radical.hpp"
#include "pwcycles/scenario.hpp"

namespace pwc {

inline constexpr int kReportVersion = 1;

/// Result of running the full pipeline on a scenario.
struct Analysis {
  Scenario scenario;
  CycleSearch search;
  double elapsed_ms = 0;
};

inline Analysis analyze(const Scenario& scenario) {
  const auto t0 = std::chrono::steady_clock::now();
  Analysis a{scenario, find_cycles(scenario.system, scenario.find_options()), 0};
  a.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return a;
}

namespace detail {

inline Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json exact_json(const RealRoot& root, const UnivariatePolynomial& eliminant,
                       const std::vector<RealRoot>& siblings) {
  if (eliminant.is_zero()) return nullptr;
  auto form = exact_form(root, eliminant, siblings);
  if (!form) return nullptr;
  return Json{{"form", form->text}, {"minimal_polynomial", form->minimal.to_string("y")}};
}

inline Json certificate_json(const CycleCertificate& c, const ClosingSolution& sol,
                             const std::vector<RealRoot>& roots1, const std::vector<RealRoot>& roots2) {
  const auto& k = c.candidate;
  Json j;
  j["y1"] = k.y1;
  j["y2"] = k.y2;
  j["y1_exact"] = exact_json(k.root1, sol.eliminant1, roots1);
  j["y2_exact"] = exact_json(k.root2, sol.eliminant2, roots2);
  j["at_pole"] = k.at_pole;
  j["level_right"] = k.at_pole ? Json(nullptr) : number_or_null(k.level_right);
  j["level_left"] = k.at_pole ? Json(nullptr) : number_or_null(k.level_left);
  j["residuals"] = Json::array({k.residual1, k.residual2});
  j["scaled_residuals"] = Json::array({k.scaled_residual1, k.scaled_residual2});
  j["status"] = to_string(c.status);
  j["reason"] = c.reason;
  j["closure_errors"] = Json::array({number_or_null(c.closure_errors[0]), number_or_null(c.closure_errors[1])});
  j["crossing_signs"] = Json::array({Json::array({c.crossing_signs[0][0], c.crossing_signs[0][1]}),
                                     Json::array({c.crossing_signs[1][0], c.crossing_signs[1][1]})});
  j["right_start"] = c.right_start ? Json(*c.right_start) : Json(nullptr);
  return j;
}

}  // namespace detail

/// Report document. Field order is fixed; doubles are written in their
/// shortest round-trip decimal form.
inline Json report_json(const Analysis& a) {
  const auto& cs = a.search.closing;
  const auto& sol = a.search.solution;
  const std::array<std::string, 2> yy{"y1", "y2"}, zw{"z", "w"};

  Json closing;
  closing["F1"] = cs.F1.to_string(yy);
  closing["F2"] = cs.F2.to_string(yy);
  closing["D1"] = cs.D1.to_string("y");
  closing["D2"] = cs.D2.to_string("y");
  closing["degree1"] = cs.degree1;
  closing["degree2"] = cs.degree2;
  closing["symmetric_form"] =
      cs.symmetric_form ? Json{{"P1", cs.symmetric_form->first.to_string(zw)}, {"P2", cs.symmetric_form->second.to_string(zw)}}
                        : Json(nullptr);
  closing["identical_integrals"] = cs.identical_integrals;
  closing["eliminant1"] = sol.eliminant1.to_string("y");
  closing["eliminant2"] = sol.eliminant2.to_string("y");

  Json bound = nullptr;
  if (a.search.bound)
    bound = Json{{"raw_product", a.search.bound->raw_product},
                 {"cycle_bound", a.search.bound->cycle_bound},
                 {"symmetric_product", a.search.bound->symmetric_product},
                 {"form", form_name(a.search.bound->form)}};

  const auto roots_of = [](const UnivariatePolynomial& p) {
    return p.degree() > 0 ? real_roots(p, RootOptions{0.0}) : std::vector<RealRoot>{};
  };
  const auto roots1 = roots_of(sol.eliminant1);
  const auto roots2 = sol.eliminant1 == sol.eliminant2 ? roots1 : roots_of(sol.eliminant2);

  Json certs = Json::array();
  for (const auto& c : a.search.certificates) certs.push_back(detail::certificate_json(c, sol, roots1, roots2));

  Json j;
  j["version"] = kReportVersion;
  j["scenario"] = scenario_to_json(a.scenario);
  j["closing"] = std::move(closing);
  j["continuum"] = a.search.continuum;
  j["bound"] = std::move(bound);
  j["certificates"] = std::move(certs);
  j["verified_count"] = a.search.verified_count();
  j["timings"] = {{"total_ms", a.elapsed_ms}};
  return j;
}

}  // namespace pwc
