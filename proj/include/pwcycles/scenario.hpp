#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pwcycles/closing.hpp"
#include "pwcycles/verify.hpp"

namespace pwc {

using Json = nlohmann::ordered_json;

struct ScenarioOptions {
  double tol_algebraic = ClosingOptions{}.tol_algebraic;
  double tol_closure = VerifyOptions{}.closure_tol;
};

/// A piecewise system together with the tolerances used to analyze it.
struct Scenario {
  std::string name;
  PiecewiseSystem system;
  ScenarioOptions options;

  FindOptions find_options() const {
    FindOptions f;
    f.closing.tol_algebraic = options.tol_algebraic;
    f.verify.closure_tol = options.tol_closure;
    return f;
  }
};

inline constexpr int kScenarioVersion = 1;

namespace detail {

inline void require_object(const Json& j, const std::string& path, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [k, _] : j.items())
    if (!allowed.count(k)) throw SchemaError(path + "." + k, "unknown field");
}

inline const Json& require_field(const Json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) throw SchemaError(path + "." + key, "missing required field");
  return j.at(key);
}

/// Integers and "p/q" strings are read exactly; a JSON float is taken at its
/// exact binary value.
inline Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>()), 10))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>()), 10));
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw SchemaError(path, "non-finite number");
    return rational_from_double(v);
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

inline Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return Json(r.get_num().get_si());
  return Json(r.get_str());
}

inline double positive_number(const Json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double v = j.get<double>();
  if (!(v > 0) || !std::isfinite(v)) throw SchemaError(path, "expected a positive finite number");
  return v;
}

inline FamilyKind parse_family(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a family name");
  const auto s = j.get<std::string>();
  for (auto k : {FamilyKind::Lc, FamilyKind::S1, FamilyKind::S2, FamilyKind::S3, FamilyKind::S4})
    if (family_name(k) == s) return k;
  throw SchemaError(path, "unknown family '" + s + "' (expected Lc, S1, S2, S3 or S4)");
}

inline CenterFamily family_of(FamilyKind k, const LinearCenter& lc = {}) {
  switch (k) {
    case FamilyKind::Lc: return lc;
    case FamilyKind::S1: return CubicCenter::S1;
    case FamilyKind::S2: return CubicCenter::S2;
    case FamilyKind::S3: return CubicCenter::S3;
    case FamilyKind::S4: return CubicCenter::S4;
  }
  return CubicCenter::S1;
}

inline CenterSpec parse_center(const Json& j, const std::string& path) {
  require_object(j, path, {"family", "params", "affine", "time_sign"});
  const auto kind = parse_family(require_field(j, path, "family"), path + ".family");

  LinearCenter lc;
  if (kind == FamilyKind::Lc) {
    const auto& p = require_field(j, path, "params");
    if (!p.is_array() || p.size() != 5) throw SchemaError(path + ".params", "expected [A, B, C, D, omega]");
    Rational* slots[] = {&lc.A, &lc.B, &lc.C, &lc.D, &lc.omega};
    for (std::size_t i = 0; i < 5; ++i)
      *slots[i] = rational_from_json(p[i], path + ".params[" + std::to_string(i) + "]");
  } else if (j.contains("params")) {
    const auto& p = j.at("params");
    if (!p.is_array() || !p.empty()) throw SchemaError(path + ".params", "cubic families take no parameters");
  }

  CenterSpec spec;
  spec.family = family_of(kind, lc);
  if (j.contains("affine")) {
    const auto& a = j.at("affine");
    if (!a.is_array() || a.size() != 6)
      throw SchemaError(path + ".affine", "expected [a, b, c, alpha, beta, gamma]");
    Rational* slots[] = {&spec.map.a, &spec.map.b, &spec.map.c, &spec.map.alpha, &spec.map.beta, &spec.map.gamma};
    for (std::size_t i = 0; i < 6; ++i)
      *slots[i] = rational_from_json(a[i], path + ".affine[" + std::to_string(i) + "]");
  }
  if (j.contains("time_sign")) {
    const auto& t = j.at("time_sign");
    if (!t.is_number_integer() || (t.get<int>() != 1 && t.get<int>() != -1))
      throw SchemaError(path + ".time_sign", "expected 1 or -1");
    spec.time_sign = t.get<int>();
  }
  return spec;
}

inline Json center_to_json(const CenterSpec& c) {
  Json j;
  j["family"] = family_name(c.kind());
  if (const auto* lc = std::get_if<LinearCenter>(&c.family))
    j["params"] = Json::array({rational_to_json(lc->A), rational_to_json(lc->B), rational_to_json(lc->C),
                               rational_to_json(lc->D), rational_to_json(lc->omega)});
  const auto& m = c.map;
  j["affine"] = Json::array({rational_to_json(m.a), rational_to_json(m.b), rational_to_json(m.c),
                             rational_to_json(m.alpha), rational_to_json(m.beta), rational_to_json(m.gamma)});
  j["time_sign"] = c.time_sign;
  return j;
}

}  // namespace detail

/// Builds a Scenario from parsed JSON. Shape problems raise SchemaError with
/// the offending field path; a well-formed but invalid system (singular map,
/// D <= 0, ...) raises InvariantError.
inline Scenario scenario_from_json(const Json& j) {
  using namespace detail;
  require_object(j, "$", {"version", "name", "right", "left", "options"});
  const auto& v = require_field(j, "$", "version");
  if (!v.is_number_integer() || v.get<int>() != kScenarioVersion)
    throw SchemaError("$.version", "unsupported version (expected 1)");
  Scenario s;
  const auto& name = require_field(j, "$", "name");
  if (!name.is_string()) throw SchemaError("$.name", "expected a string");
  s.name = name.get<std::string>();
  s.system.right = parse_center(require_field(j, "$", "right"), "$.right");
  s.system.left = parse_center(require_field(j, "$", "left"), "$.left");
  if (j.contains("options")) {
    const auto& o = j.at("options");
    require_object(o, "$.options", {"tol_algebraic", "tol_closure"});
    if (o.contains("tol_algebraic")) s.options.tol_algebraic = positive_number(o.at("tol_algebraic"), "$.options.tol_algebraic");
    if (o.contains("tol_closure")) s.options.tol_closure = positive_number(o.at("tol_closure"), "$.options.tol_closure");
  }
  try {
    s.system.validate();
  } catch (const Error& e) {
    throw InvariantError(e.what());
  }
  return s;
}

inline Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline Scenario load_scenario(const std::string& path) { return parse_scenario(read_text_file(path)); }

/// Canonical encoding; parse(to_json(s)) reproduces s exactly.
inline Json scenario_to_json(const Scenario& s) {
  Json j;
  j["version"] = kScenarioVersion;
  j["name"] = s.name;
  j["right"] = detail::center_to_json(s.system.right);
  j["left"] = detail::center_to_json(s.system.left);
  j["options"] = {{"tol_algebraic", s.options.tol_algebraic}, {"tol_closure", s.options.tol_closure}};
  return j;
}

}  // namespace pwc
