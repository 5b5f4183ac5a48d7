#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "pwcycles/scenario.hpp"
#include "pwcycles/sim.hpp"

namespace pwc {

struct CycleArcs {
  std::vector<OrbitSample> right, left;
  double y1 = 0, y2 = 0;
};

/// Re-integrates both half arcs of every verified cycle listed in a report.
inline std::vector<CycleArcs> cycle_arcs(const Json& report) {
  if (!report.is_object() || !report.contains("scenario") || !report.contains("certificates"))
    throw SchemaError("$", "not a report document");
  const auto scenario = scenario_from_json(report.at("scenario"));
  const CompiledField right(conjugated_field(scenario.system.right));
  const CompiledField left(conjugated_field(scenario.system.left));

  std::vector<CycleArcs> out;
  for (const auto& c : report.at("certificates")) {
    if (c.value("status", "") != to_string(CycleStatus::VerifiedCrossingCycle)) continue;
    const double y1 = c.at("y1").get<double>(), y2 = c.at("y2").get<double>();
    const double rs = c.at("right_start").get<double>();
    const double ls = rs == y1 ? y2 : y1;
    CycleArcs arcs;
    arcs.y1 = y1;
    arcs.y2 = y2;
    arcs.right = integrate_half(right, rs, Side::Right).samples;
    arcs.left = integrate_half(left, ls, Side::Left).samples;
    out.push_back(std::move(arcs));
  }
  return out;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v);  // no "-0"
  return buf;
}

}  // namespace detail

/// Standalone SVG 1.1 document: the switching line x = 0, each verified cycle
/// as a right arc (solid) and a left arc (dashed), and the two crossing
/// points. The view box fits everything with a 10% margin.
inline std::string render_svg(const Json& report) {
  using detail::fmt;
  const auto cycles = cycle_arcs(report);

  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  if (!cycles.empty()) {
    xmin = xmax = 0;
    ymin = ymax = cycles.front().y1;
    for (const auto& c : cycles)
      for (const auto* arc : {&c.right, &c.left})
        for (const auto& s : *arc) {
          xmin = std::min(xmin, s.x), xmax = std::max(xmax, s.x);
          ymin = std::min(ymin, s.y), ymax = std::max(ymax, s.y);
        }
  }
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double mx = 0.1 * std::max(xmax - xmin, 1e-9 * span), my = 0.1 * std::max(ymax - ymin, 1e-9 * span);
  xmin -= mx, xmax += mx, ymin -= my, ymax += my;
  const double w = xmax - xmin, h = ymax - ymin;
  const double stroke = 0.004 * std::max(w, h);

  // SVG's y axis points down; draw in (x, -y).
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"" +
       fmt(600 * h / w) + "\" viewBox=\"" + fmt(xmin) + " " + fmt(-ymax) + " " + fmt(w) + " " + fmt(h) + "\">\n";
  s += "  <title>crossing limit cycles</title>\n";
  s += "  <line id=\"switching-line\" x1=\"0\" y1=\"" + fmt(-ymax) + "\" x2=\"0\" y2=\"" + fmt(-ymin) +
       "\" stroke=\"#888888\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
  int k = 0;
  for (const auto& c : cycles) {
    s += "  <g id=\"cycle-" + std::to_string(k++) + "\" fill=\"none\" stroke-width=\"" + fmt(stroke) + "\">\n";
    auto polyline = [&](const std::vector<OrbitSample>& arc, const char* cls, const char* color, const char* dash) {
      s += "    <polyline class=\"" + std::string(cls) + "\" stroke=\"" + color + "\"";
      if (*dash) s += " stroke-dasharray=\"" + fmt(4 * stroke) + "\"";
      s += " points=\"";
      for (std::size_t i = 0; i < arc.size(); ++i) s += (i ? " " : "") + fmt(arc[i].x) + "," + fmt(-arc[i].y);
      s += "\"/>\n";
    };
    polyline(c.right, "right-arc", "#b03a2e", "");
    polyline(c.left, "left-arc", "#1f618d", "dash");
    for (double y : {c.y1, c.y2})
      s += "    <circle class=\"endpoint\" cx=\"0\" cy=\"" + fmt(-y) + "\" r=\"" + fmt(2.5 * stroke) +
           "\" fill=\"#000000\" stroke=\"none\"/>\n";
    s += "  </g>\n";
  }
  s += "</svg>\n";
  return s;
}

inline void write_svg(const Json& report, const std::string& path) {
  const auto doc = render_svg(report);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << doc;
  if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

}  // namespace pwc
