#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pwcycles/scenario.hpp"

namespace pwc {

using FamilyPair = std::pair<FamilyKind, FamilyKind>;

/// Maximum number of crossing limit cycles for each pair of centers among
/// Lc, S1, S2 (order-insensitive). Only these pairs are covered.
inline int theorem_bound(FamilyPair pair) {
  auto [a, b] = pair;
  if (a > b) std::swap(a, b);
  using K = FamilyKind;
  if (a == K::Lc && b == K::Lc) return 0;
  if (a == K::Lc && b == K::S1) return 1;
  if (a == K::Lc && b == K::S2) return 2;
  if (a == K::S1 && b == K::S1) return 1;
  if (a == K::S1 && b == K::S2) return 3;
  if (a == K::S2 && b == K::S2) return 9;
  throw InvalidParameters("no known bound for the pair (" + family_name(pair.first) + ", " +
                          family_name(pair.second) + ")");
}

/// Parses "A,B" with A, B in {Lc, S1, S2}.
inline FamilyPair parse_family_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidParameters("pair must look like 'S1,S2'");
  auto one = [](const std::string& s) {
    for (auto k : {FamilyKind::Lc, FamilyKind::S1, FamilyKind::S2, FamilyKind::S3, FamilyKind::S4})
      if (family_name(k) == s) return k;
    throw InvalidParameters("unknown family '" + s + "'");
  };
  FamilyPair p{one(text.substr(0, comma)), one(text.substr(comma + 1))};
  theorem_bound(p);
  return p;
}

/// Random ratio p/q with p uniform in [lo, hi] and q uniform in [1, 8].
template <class Rng>
Rational random_ratio(Rng& rng, int lo = -8, int hi = 8) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 8);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

template <class Rng>
AffineMap random_affine_map(Rng& rng) {
  while (true) {
    AffineMap m{random_ratio(rng), random_ratio(rng), random_ratio(rng),
                random_ratio(rng), random_ratio(rng), random_ratio(rng)};
    if (m.invertible()) return m;
  }
}

template <class Rng>
CenterSpec random_center(Rng& rng, FamilyKind kind) {
  CenterSpec spec;
  if (kind == FamilyKind::Lc) {
    LinearCenter lc;
    lc.A = random_ratio(rng);
    lc.B = random_ratio(rng);
    lc.C = random_ratio(rng);
    lc.D = random_ratio(rng, 1, 8);
    lc.omega = random_ratio(rng, 1, 8);
    spec.family = lc;
  } else {
    spec.family = detail::family_of(kind);
  }
  spec.map = random_affine_map(rng);
  spec.time_sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
  return spec;
}

/// Instance `index` of a sweep. Each index has its own seed sequence, so the
/// draw does not depend on scheduling.
inline PiecewiseSystem sweep_instance(FamilyPair pair, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  PiecewiseSystem pw;
  pw.right = random_center(rng, pair.first);
  pw.left = random_center(rng, pair.second);
  return pw;
}

struct SweepSummary {
  FamilyPair pair;
  int n = 0;
  std::uint64_t seed = 0;
  std::map<int, int> histogram;  // verified count -> number of instances
  int max_verified = 0;
  int bound = 0;
  int continuum = 0;              // instances whose closing system is a continuum
  std::vector<std::pair<int, std::string>> failures;  // (index, message)
  std::vector<int> verified;      // per instance, -1 for failures and continua

  bool within_bound() const { return max_verified <= bound; }
};

/// Runs find_cycles on n random instances of `pair` using `workers` threads
/// (0 picks the hardware concurrency). The summary depends only on
/// (pair, n, seed, options).
inline SweepSummary sweep(FamilyPair pair, int n, std::uint64_t seed, const FindOptions& opts = {},
                          unsigned workers = 0) {
  if (n < 1) throw InvalidParameters("sweep count must be at least 1");
  SweepSummary out;
  out.pair = pair;
  out.n = n;
  out.seed = seed;
  out.bound = theorem_bound(pair);

  struct Slot {
    int verified = -1;
    bool continuum = false;
    std::string failure;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      auto& slot = slots[static_cast<std::size_t>(i)];
      try {
        auto res = find_cycles(sweep_instance(pair, seed, static_cast<std::uint64_t>(i)), opts);
        slot.continuum = res.continuum;
        if (!res.continuum) slot.verified = res.verified_count();
      } catch (const std::exception& e) {
        slot.failure = e.what();
      }
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (int i = 0; i < n; ++i) {
    const auto& slot = slots[static_cast<std::size_t>(i)];
    out.verified.push_back(slot.verified);
    if (!slot.failure.empty()) {
      out.failures.emplace_back(i, slot.failure);
    } else if (slot.continuum) {
      ++out.continuum;
    } else {
      ++out.histogram[slot.verified];
      out.max_verified = std::max(out.max_verified, slot.verified);
    }
  }
  return out;
}

inline Json sweep_json(const SweepSummary& s) {
  Json hist = Json::object();
  for (const auto& [k, v] : s.histogram) hist[std::to_string(k)] = v;
  Json failures = Json::array();
  for (const auto& [i, msg] : s.failures) failures.push_back({{"index", i}, {"error", msg}});
  return Json{{"pair", family_name(s.pair.first) + "," + family_name(s.pair.second)},
              {"n", s.n},
              {"seed", s.seed},
              {"histogram", hist},
              {"max_verified", s.max_verified},
              {"theorem_bound", s.bound},
              {"within_bound", s.within_bound()},
              {"continuum", s.continuum},
              {"failures", failures}};
}

}  // namespace pwc
