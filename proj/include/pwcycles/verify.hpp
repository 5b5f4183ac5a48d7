#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pwcycles/closing.hpp"
#include "pwcycles/sim.hpp"

namespace pwc {

enum class CycleStatus {
  VerifiedCrossingCycle,
  SpuriousPole,
  SpuriousNonCrossingRegion,
  SpuriousDisconnected,
  SpuriousOrientation,
  Unverifiable,
};

inline std::string to_string(CycleStatus s) {
  switch (s) {
    case CycleStatus::VerifiedCrossingCycle: return "VerifiedCrossingCycle";
    case CycleStatus::SpuriousPole: return "SpuriousPole";
    case CycleStatus::SpuriousNonCrossingRegion: return "SpuriousNonCrossingRegion";
    case CycleStatus::SpuriousDisconnected: return "SpuriousDisconnected";
    case CycleStatus::SpuriousOrientation: return "SpuriousOrientation";
    case CycleStatus::Unverifiable: return "Unverifiable";
  }
  return "?";
}

enum class CrossingVerdict { Crossing, NonCrossing, Tangent };

inline std::string to_string(CrossingVerdict v) {
  switch (v) {
    case CrossingVerdict::Crossing: return "crossing";
    case CrossingVerdict::NonCrossing: return "non-crossing";
    case CrossingVerdict::Tangent: return "tangent";
  }
  return "?";
}

struct CrossingCheck {
  double right_dx = 0;  // x-velocity of the right field at (0, y)
  double left_dx = 0;   // x-velocity of the left field at (0, y)
  CrossingVerdict verdict = CrossingVerdict::Tangent;
  /// +1 when orbits pass rightward through (0, y), -1 leftward, 0 otherwise.
  int direction = 0;
};

/// Piecewise system with both fields compiled once, for repeated evaluation.
struct CompiledSystem {
  explicit CompiledSystem(const PiecewiseSystem& pw)
      : right_field(conjugated_field(pw.right)),
        left_field(conjugated_field(pw.left)),
        right(right_field),
        left(left_field) {}
  VectorFieldPair right_field, left_field;
  CompiledField right, left;
};

inline CrossingCheck check_crossing_region(const CompiledSystem& sys, double y, double tangency_tol = 1e-13) {
  CrossingCheck out;
  out.right_dx = sys.right.dx(0.0, y);
  out.left_dx = sys.left.dx(0.0, y);
  auto tangent = [&](const CompiledField& f, double v) {
    return std::fabs(v) <= tangency_tol * std::max(1.0, f.dx_magnitude(0.0, y));
  };
  if (tangent(sys.right, out.right_dx) || tangent(sys.left, out.left_dx)) {
    out.verdict = CrossingVerdict::Tangent;
  } else if ((out.right_dx > 0) == (out.left_dx > 0)) {
    out.verdict = CrossingVerdict::Crossing;
    out.direction = out.right_dx > 0 ? 1 : -1;
  } else {
    out.verdict = CrossingVerdict::NonCrossing;
  }
  return out;
}

inline CrossingCheck check_crossing_region(const PiecewiseSystem& pw, double y) {
  return check_crossing_region(CompiledSystem(pw), y);
}

struct VerifyOptions {
  double closure_tol = 1e-6;
  SimOptions sim;
};

struct CycleCertificate {
  CandidatePair candidate;
  CycleStatus status = CycleStatus::Unverifiable;
  std::string reason;
  /// |return - expected| for the right arc and the left arc (NaN if not run).
  std::array<double, 2> closure_errors{NAN, NAN};
  /// (right_dx, left_dx) at (0, y1) and at (0, y2).
  std::array<std::array<double, 2>, 2> crossing_signs{};
  /// Ordinate where the right arc starts (the left arc starts at the other
  /// endpoint); meaningful once orientation has been resolved.
  std::optional<double> right_start;

  bool verified() const { return status == CycleStatus::VerifiedCrossingCycle; }
};

/// Checks a closing-equation solution against the actual piecewise flow:
/// poles, crossing region at both endpoints, opposite transit directions, and
/// closure of both half arcs.
inline CycleCertificate verify_candidate(const CompiledSystem& sys, const CandidatePair& cand,
                                         const VerifyOptions& opts = {}) {
  CycleCertificate cert;
  cert.candidate = cand;
  if (cand.at_pole) {
    cert.status = CycleStatus::SpuriousPole;
    cert.reason = "an endpoint is a pole of a first integral";
    return cert;
  }
  const auto c1 = check_crossing_region(sys, cand.y1, opts.sim.tangency_tol);
  const auto c2 = check_crossing_region(sys, cand.y2, opts.sim.tangency_tol);
  cert.crossing_signs = {{{c1.right_dx, c1.left_dx}, {c2.right_dx, c2.left_dx}}};
  if (c1.verdict == CrossingVerdict::Tangent || c2.verdict == CrossingVerdict::Tangent) {
    cert.status = CycleStatus::Unverifiable;
    cert.reason = "tangent endpoint";
    return cert;
  }
  if (c1.verdict == CrossingVerdict::NonCrossing || c2.verdict == CrossingVerdict::NonCrossing) {
    cert.status = CycleStatus::SpuriousNonCrossingRegion;
    cert.reason = "an endpoint lies outside the crossing region";
    return cert;
  }
  if (c1.direction == c2.direction) {
    cert.status = CycleStatus::SpuriousOrientation;
    cert.reason = "both endpoints are crossed in the same direction";
    return cert;
  }

  // The right field enters x > 0 where the crossing direction is +1.
  const double right_start = c1.direction > 0 ? cand.y1 : cand.y2;
  const double left_start = c1.direction > 0 ? cand.y2 : cand.y1;
  cert.right_start = right_start;

  auto arc = [&](const CompiledField& f, double from, double to, Side side, int idx) -> bool {
    try {
      const auto orbit = integrate_half(f, from, side, opts.sim);
      cert.closure_errors[static_cast<std::size_t>(idx)] = std::fabs(orbit.y_end - to);
    } catch (const SimError& e) {
      if (e.kind() == SimError::Kind::NoReturn || e.kind() == SimError::Kind::Blowup) {
        cert.status = CycleStatus::SpuriousDisconnected;
        cert.reason = std::string(side == Side::Right ? "right" : "left") + " arc: " + to_string(e.kind());
      } else {
        cert.status = CycleStatus::Unverifiable;
        cert.reason = std::string(side == Side::Right ? "right" : "left") + " arc: " + e.what();
      }
      return false;
    }
    if (cert.closure_errors[static_cast<std::size_t>(idx)] > opts.closure_tol) {
      cert.status = CycleStatus::SpuriousDisconnected;
      cert.reason = std::string(side == Side::Right ? "right" : "left") +
                    " arc returns away from the other endpoint";
      return false;
    }
    return true;
  };
  if (!arc(sys.right, right_start, left_start, Side::Right, 0)) return cert;
  if (!arc(sys.left, left_start, right_start, Side::Left, 1)) return cert;
  cert.status = CycleStatus::VerifiedCrossingCycle;
  return cert;
}

inline CycleCertificate verify_candidate(const PiecewiseSystem& pw, const CandidatePair& cand,
                                         const VerifyOptions& opts = {}) {
  return verify_candidate(CompiledSystem(pw), cand, opts);
}

struct FindOptions {
  ClosingOptions closing;
  VerifyOptions verify;
};

struct CycleSearch {
  ClosingSystem closing;
  std::optional<BezoutBound> bound;
  ClosingSolution solution;
  bool continuum = false;
  std::vector<CycleCertificate> certificates;

  int verified_count() const {
    int n = 0;
    for (const auto& c : certificates) n += c.verified() ? 1 : 0;
    return n;
  }
};

/// Full pipeline: closing system, Bezout bound, real solutions, flow checks.
inline CycleSearch find_cycles(const PiecewiseSystem& pw, const FindOptions& opts = {}) {
  CycleSearch out;
  out.closing = build_closing_system(pw);
  try {
    out.bound = bezout_bound(out.closing);
    out.solution = solve_closing(out.closing, opts.closing);
  } catch (const ContinuumDetected&) {
    out.continuum = true;
    return out;
  }
  const CompiledSystem sys(pw);
  for (const auto& c : out.solution.candidates) out.certificates.push_back(verify_candidate(sys, c, opts.verify));
  for (const auto& c : out.solution.pole_rejected) out.certificates.push_back(verify_candidate(sys, c, opts.verify));
  if (out.verified_count() > out.bound->cycle_bound)
    throw Error("verified cycles exceed the Bezout bound");
  return out;
}

}  // namespace pwc
