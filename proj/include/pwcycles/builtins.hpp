#pragma once

#include <array>
#include <string>
#include <string_view>

#include "pwcycles/scenario.hpp"

namespace pwc {

inline constexpr std::array<std::string_view, 5> kBuiltinIds = {"prop1", "prop2", "prop3", "prop4", "prop5"};

/// The five piecewise systems whose limit cycles are worked out by hand in
/// the reference analysis, with exactly the stored affine data.
inline Scenario builtin_scenario(std::string_view id) {
  const AffineMap prop1_left{2, 0, 3, 2, -1, 1};  // (3 + 2x, 1 + 2x - y)
  Scenario s;
  s.name = std::string(id);
  if (id == "prop1") {
    s.system.right = {LinearCenter{0, 2, 0, 1, 1}, AffineMap::identity(), 1};
    s.system.left = {CubicCenter::S1, prop1_left, 1};
  } else if (id == "prop2") {
    s.system.right = {LinearCenter{-1, 1, Rational(4, 5), 1, 1}, AffineMap::identity(), 1};
    s.system.left = {CubicCenter::S2, AffineMap{-2, -1, -1, -2, -2, 1}, 1};
  } else if (id == "prop3") {
    s.system.right = {CubicCenter::S1, AffineMap{0, -1, 1, -2, 0, 1}, 1};
    s.system.left = {CubicCenter::S1, prop1_left, 1};
  } else if (id == "prop4") {
    s.system.right = {CubicCenter::S1, AffineMap::translation(1, -2), 1};
    s.system.left = {CubicCenter::S2, AffineMap::identity(), -1};
  } else if (id == "prop5") {
    s.system.right = {CubicCenter::S2, AffineMap::identity(), 1};
    s.system.left = {CubicCenter::S2, AffineMap{1, 0, 1, 1, -1, -1}, 1};
  } else {
    throw InvalidParameters("unknown builtin '" + std::string(id) + "' (expected prop1..prop5)");
  }
  return s;
}

}  // namespace pwc
