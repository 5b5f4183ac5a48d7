// pwcycles: crossing limit cycles of planar piecewise systems built from two
// isochronous centers.
//
//   pwcycles builtin prop1
//   pwcycles analyze scenarios/prop3.json --out report.json
//   pwcycles sweep --pair S1,S2 -n 200 --seed 7
//   pwcycles plot report.json -o fig.svg
//
// Exit status: 0 ok, 2 bad input, 3 internal inconsistency.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "pwcycles.hpp"

namespace {

struct Globals {
  std::optional<double> tol_algebraic;
  std::optional<double> tol_closure;
  bool compact = false;
  bool pretty = false;
  std::string out;
};

void emit(const Globals& g, const pwc::Json& doc) {
  const std::string text = doc.dump(g.compact && !g.pretty ? -1 : 2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) throw pwc::IoError("cannot write '" + g.out + "'");
}

pwc::Scenario with_overrides(pwc::Scenario s, const Globals& g) {
  if (g.tol_algebraic) s.options.tol_algebraic = *g.tol_algebraic;
  if (g.tol_closure) s.options.tol_closure = *g.tol_closure;
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Crossing limit cycles of piecewise systems of isochronous centers"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol-algebraic", g.tol_algebraic, "scaled residual accepted for closing solutions")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-closure", g.tol_closure, "endpoint error accepted when closing an orbit")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.compact, "compact single-line JSON");
  app.add_flag("--pretty", g.pretty, "indented JSON (default)");
  app.add_option("-o,--out", g.out, "output file (default: stdout)");

  std::string builtin_id;
  auto* builtin = app.add_subcommand("builtin", "analyze one of the built-in systems prop1..prop5");
  builtin->add_option("id", builtin_id)->required();

  std::string scenario_path;
  auto* analyze = app.add_subcommand("analyze", "analyze a scenario JSON file");
  analyze->add_option("scenario", scenario_path)->required();

  std::string pair_text;
  int count = 200;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  auto* sweep = app.add_subcommand("sweep", "count verified cycles on random instances of a family pair");
  sweep->add_option("--pair", pair_text, "family pair, e.g. S1,S2")->required();
  sweep->add_option("-n", count, "number of instances")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed, "random seed");
  sweep->add_option("--workers", workers, "worker threads (0 = hardware concurrency)");

  std::string report_path;
  auto* plot = app.add_subcommand("plot", "draw the verified cycles of a report as SVG");
  plot->add_option("report", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (builtin->parsed()) {
    emit(g, pwc::report_json(pwc::analyze(with_overrides(pwc::builtin_scenario(builtin_id), g))));
  } else if (analyze->parsed()) {
    emit(g, pwc::report_json(pwc::analyze(with_overrides(pwc::load_scenario(scenario_path), g))));
  } else if (sweep->parsed()) {
    pwc::FindOptions opts;
    if (g.tol_algebraic) opts.closing.tol_algebraic = *g.tol_algebraic;
    if (g.tol_closure) opts.verify.closure_tol = *g.tol_closure;
    const auto summary = pwc::sweep(pwc::parse_family_pair(pair_text), count, seed, opts, workers);
    emit(g, pwc::sweep_json(summary));
    if (!summary.within_bound()) {
      std::cerr << "error: verified count " << summary.max_verified << " exceeds the bound " << summary.bound << "\n";
      return 3;
    }
  } else if (plot->parsed()) {
    if (g.out.empty()) throw pwc::InvalidParameters("plot needs -o <file.svg>");
    pwc::Json report;
    try {
      report = pwc::Json::parse(pwc::read_text_file(report_path));
    } catch (const pwc::Json::parse_error& e) {
      throw pwc::SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    pwc::write_svg(report, g.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pwc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
