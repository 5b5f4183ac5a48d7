#pragma once

// Half-systems of the five built-in cases, written out term by term exactly
// as they are displayed in the reference derivation, together with the base
// family and affine data they are claimed to come from.

#include <string>
#include <vector>

#include "pwcycles.hpp"

namespace ref {

using pwc::BivariatePolynomial;
using pwc::Rational;

struct DisplayedSystem {
  std::string label;
  pwc::CenterSpec spec;
  pwc::VectorFieldPair displayed;
};

inline BivariatePolynomial m(const Rational& c, int i, int j) { return BivariatePolynomial::monomial(c, i, j); }

inline std::vector<DisplayedSystem> displayed_systems() {
  const Rational h(1, 2);
  const pwc::AffineMap left13{2, 0, 3, 2, -1, 1};  // (3 + 2x, 1 + 2x - y)
  const auto left13_field = pwc::VectorFieldPair{
      h * (m(23, 0, 0) + m(38, 1, 0) + m(7, 0, 1) + m(16, 2, 0) + m(16, 1, 1) + m(-3, 0, 2) + m(8, 2, 1) +
           m(-2, 1, 2)),
      m(12, 0, 0) + m(12, 1, 0) + m(13, 0, 1) + m(16, 1, 1) + m(4, 1, 2) + m(-1, 0, 3)};
  std::vector<DisplayedSystem> out;
  out.push_back({"prop1 left", {pwc::CubicCenter::S1, left13, 1}, left13_field});
  out.push_back(
      {"prop2 left",
       {pwc::CubicCenter::S2, pwc::AffineMap{-2, -1, -1, -2, -2, 1}, 1},
       {h * (m(-1, 0, 0) + m(30, 1, 0) + m(25, 0, 1) + m(24, 2, 0) + m(-15, 0, 2) + m(-48, 3, 0) + m(-120, 2, 1) +
             m(-90, 1, 2) + m(-20, 0, 3)),
        m(-20, 1, 0) + m(-15, 0, 1) + m(24, 1, 1) + m(18, 0, 2) + m(32, 3, 0) + m(72, 2, 1) + m(48, 1, 2) +
            m(9, 0, 3)}});
  out.push_back(
      {"prop3 right",
       {pwc::CubicCenter::S1, pwc::AffineMap{0, -1, 1, -2, 0, 1}, 1},
       {-h * (m(-1, 0, 0) + m(-4, 1, 0) + m(3, 0, 1) + m(12, 2, 0) + m(-4, 1, 1) + m(-1, 0, 2) + m(-8, 3, 0) +
              m(2, 1, 2)),
        m(1, 0, 0) + m(-6, 1, 0) + m(2, 0, 1) + m(4, 2, 0) + m(4, 1, 1) + m(-3, 0, 2) + m(-4, 2, 1) + m(1, 0, 3)}});
  out.push_back({"prop3 left", {pwc::CubicCenter::S1, left13, 1}, left13_field});
  out.push_back(
      {"prop4 right",
       {pwc::CubicCenter::S1, pwc::AffineMap::translation(1, -2), 1},
       {m(-1, 0, 0) + m(-1, 1, 0) + m(3, 0, 1) + m(3, 2, 0) + m(4, 1, 1) + m(-1, 0, 2) + m(1, 3, 0) + m(-1, 1, 2),
        m(7, 0, 0) + m(-3, 1, 0) + m(-11, 0, 1) + m(-2, 2, 0) + m(2, 1, 1) + m(6, 0, 2) + m(1, 2, 1) +
            m(-1, 0, 3)}});
  out.push_back({"prop4 left",
                 {pwc::CubicCenter::S2, pwc::AffineMap::identity(), -1},
                 {m(1, 0, 1) + m(-1, 3, 0) + m(3, 1, 2), m(-1, 1, 0) + m(-3, 2, 1) + m(1, 0, 3)}});
  out.push_back(
      {"prop5 left",
       {pwc::CubicCenter::S2, pwc::AffineMap{1, 0, 1, 1, -1, -1}, 1},
       {m(-1, 0, 0) + m(-2, 3, 0) + m(-5, 0, 1) + m(-3, 0, 2) + m(6, 2, 0) + m(6, 2, 1) + m(5, 1, 0) +
            m(-3, 1, 2),
        m(-4, 3, 0) + m(-5, 0, 1) + m(6, 2, 1) + m(-6, 0, 2) + m(-1, 0, 3) + m(10, 1, 0) + m(12, 1, 1)}});
  return out;
}

}  // namespace ref
