#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>

#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace pwc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) { return read_text_file(p.string()); }

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("pwcycles_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Run run_cli(const std::string& args) {
  const auto err = scratch_dir() / "stderr.txt";
  const std::string cmd = std::string(PWC_CLI) + " " + args + " 2>" + err.string();
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string source(const std::string& rel) { return std::string(PWC_SOURCE_DIR) + "/" + rel; }

Json without_timings(Json j) {
  j.erase("timings");
  return j;
}

const char* kValidScenario = R"({
  "version": 1, "name": "t",
  "right": {"family": "Lc", "params": [0, 2, 0, 1, 1], "affine": [1, 0, 0, 0, 1, 0], "time_sign": 1},
  "left": {"family": "S1", "affine": [2, 0, 3, 2, -1, 1], "time_sign": 1}
})";

std::string schema_path_of(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<none>";
}

}  // namespace

// Scenario encoding.

TEST(Scenario, ParsesExactRationals) {
  const auto s = parse_scenario(R"({"version": 1, "name": "r",
    "right": {"family": "Lc", "params": ["-1", 1, "4/5", 1, 1]},
    "left": {"family": "S2", "affine": [-2, -1, -1, -2, -2, 1], "time_sign": 1},
    "options": {"tol_closure": 1e-7}})");
  const auto& lc = std::get<LinearCenter>(s.system.right.family);
  EXPECT_EQ(lc.C, Rational(4, 5));
  EXPECT_EQ(s.system.right.map, AffineMap::identity());
  EXPECT_EQ(s.system.left.map.gamma, 1);
  EXPECT_DOUBLE_EQ(s.options.tol_closure, 1e-7);
  EXPECT_DOUBLE_EQ(s.options.tol_algebraic, 1e-10);
}

TEST(Scenario, SchemaErrorsCarryFieldPaths) {
  EXPECT_EQ(schema_path_of("{\"version\": 1"), "$");
  EXPECT_EQ(schema_path_of(R"({"version": 2, "name": "x", "right": {}, "left": {}})"), "$.version");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "right": {}, "left": {}})"), "$.name");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "name": "x", "left": {"family": "S1"}, "right": {"family": "S7"}})"),
            "$.right.family");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "name": "x", "right": {"family": "S1"},
                               "left": {"family": "S1", "affine": [1, 0, 0, 0, "1/0", 0]}})"),
            "$.left.affine[4]");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "name": "x", "right": {"family": "Lc", "params": [1, 2]},
                               "left": {"family": "S1"}})"),
            "$.right.params");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "name": "x", "right": {"family": "S1", "time_sign": 0},
                               "left": {"family": "S1"}})"),
            "$.right.time_sign");
  EXPECT_EQ(schema_path_of(R"({"version": 1, "name": "x", "right": {"family": "S1"}, "left": {"family": "S1"},
                               "extra": true})"),
            "$.extra");
}

TEST(Scenario, InvariantErrors) {
  EXPECT_THROW(parse_scenario(R"({"version": 1, "name": "x", "right": {"family": "S1", "affine": [1, 2, 0, 2, 4, 0]},
                                  "left": {"family": "S1"}})"),
               InvariantError);
  EXPECT_THROW(parse_scenario(R"({"version": 1, "name": "x", "right": {"family": "Lc", "params": [0, 0, 0, -1, 1]},
                                  "left": {"family": "S1"}})"),
               InvariantError);
}

TEST(Scenario, RoundTripsRandomScenarios) {
  gen::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    Scenario s;
    s.name = "r" + std::to_string(trial);
    s.system.right = gen::center(rng, gen::kAllFamilies[trial % 5]);
    s.system.left = gen::center(rng, gen::kAllFamilies[(trial / 5) % 5]);
    s.options.tol_closure = std::ldexp(1.0, -gen::integer(rng, 10, 30));
    const auto text = scenario_to_json(s).dump();
    const auto back = parse_scenario(text);
    ASSERT_EQ(scenario_to_json(back).dump(), text) << text;
    ASSERT_EQ(back.system.right.map, s.system.right.map);
    ASSERT_EQ(back.system.left.time_sign, s.system.left.time_sign);
  }
}

TEST(Scenario, ShippedFilesMatchBuiltins) {
  for (auto id : kBuiltinIds) {
    const auto file = load_scenario(source("scenarios/" + std::string(id) + ".json"));
    const auto builtin = builtin_scenario(id);
    EXPECT_EQ(scenario_to_json(file).dump(), scenario_to_json(builtin).dump()) << id;
  }
  EXPECT_THROW(load_scenario(source("scenarios/missing.json")), IoError);
}

// Report content.

TEST(Report, ExactRadicals) {
  const auto r = report_json(analyze(builtin_scenario("prop1")));
  ASSERT_EQ(r["certificates"].size(), 1u);
  const auto& c = r["certificates"][0];
  EXPECT_EQ(c["y1_exact"]["form"], "(24-√339)/3");
  EXPECT_EQ(c["y2_exact"]["form"], "(24+√339)/3");
  const auto r3 = report_json(analyze(builtin_scenario("prop3")));
  EXPECT_EQ(r3["certificates"][0]["y1_exact"]["form"], "13-√131");
  const auto r4 = report_json(analyze(builtin_scenario("prop4")));
  EXPECT_EQ(r4["certificates"][0]["y1_exact"]["form"], "-1");
  // The prop5 ordinates have degree four, so only floats are reported.
  const auto r5 = report_json(analyze(builtin_scenario("prop5")));
  EXPECT_TRUE(r5["certificates"][0]["y1_exact"].is_null());
}

TEST(Report, FloatsRoundTrip) {
  const auto r = report_json(analyze(builtin_scenario("prop2")));
  const auto again = Json::parse(r.dump());
  for (std::size_t k = 0; k < r["certificates"].size(); ++k) {
    EXPECT_EQ(again["certificates"][k]["y1"].get<double>(), r["certificates"][k]["y1"].get<double>());
    EXPECT_EQ(again["certificates"][k]["y2"].get<double>(), r["certificates"][k]["y2"].get<double>());
  }
}

// Command-line behaviour.

TEST(Cli, AnalyzeMatchesBuiltin) {
  const auto a = run_cli("analyze " + source("scenarios/prop3.json"));
  const auto b = run_cli("builtin prop3");
  ASSERT_EQ(a.status, 0) << a.err;
  ASSERT_EQ(b.status, 0) << b.err;
  EXPECT_EQ(without_timings(Json::parse(a.out)).dump(2), without_timings(Json::parse(b.out)).dump(2));
}

TEST(Cli, ExitCodes) {
  const auto malformed = run_cli("analyze " + write_temp("bad.json", "{ not json").string());
  EXPECT_EQ(malformed.status, 2);
  EXPECT_NE(malformed.err.find("schema error at $"), std::string::npos);

  std::string unknown = kValidScenario;
  unknown.replace(unknown.find("\"S1\""), 4, "\"S9\"");
  const auto family = run_cli("analyze " + write_temp("family.json", unknown).string());
  EXPECT_EQ(family.status, 2);
  EXPECT_NE(family.err.find("$.left.family"), std::string::npos) << family.err;

  std::string singular = kValidScenario;
  singular.replace(singular.find("[2, 0, 3, 2, -1, 1]"), 19, "[1, 2, 0, 2, 4, 0]");
  const auto inv = run_cli("analyze " + write_temp("singular.json", singular).string());
  EXPECT_EQ(inv.status, 2);
  EXPECT_NE(inv.err.find("invariant violated"), std::string::npos) << inv.err;
  EXPECT_NE(inv.err.find("left"), std::string::npos) << inv.err;

  EXPECT_EQ(run_cli("analyze " + (scratch_dir() / "absent.json").string()).status, 2);
  EXPECT_EQ(run_cli("builtin prop9").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("sweep --pair S1,S3").status, 2);
  EXPECT_EQ(run_cli("analyze " + write_temp("ok.json", kValidScenario).string() + " --json").status, 0);
}

TEST(Cli, ToleranceOverrides) {
  const auto r = run_cli("--tol-closure 1e-7 builtin prop1 --json");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.find('\n'), r.out.size() - 1);
  EXPECT_DOUBLE_EQ(Json::parse(r.out)["scenario"]["options"]["tol_closure"].get<double>(), 1e-7);
}

TEST(Cli, SweepIsDeterministic) {
  const auto a = run_cli("sweep --pair S1,S1 -n 30 --seed 5 --workers 1");
  const auto b = run_cli("sweep --pair S1,S1 -n 30 --seed 5 --workers 3");
  ASSERT_EQ(a.status, 0) << a.err;
  ASSERT_EQ(b.status, 0) << b.err;
  auto ja = Json::parse(a.out), jb = Json::parse(b.out);
  EXPECT_EQ(ja["histogram"], jb["histogram"]);
  EXPECT_EQ(ja["max_verified"], jb["max_verified"]);
  EXPECT_LE(ja["max_verified"].get<int>(), 1);
  EXPECT_NE(Json::parse(run_cli("sweep --pair S1,S1 -n 30 --seed 6").out)["seed"], ja["seed"]);
}

TEST(Cli, PlotIsDeterministicXml) {
  const auto report = scratch_dir() / "prop2.json";
  ASSERT_EQ(run_cli("builtin prop2 -o " + report.string()).status, 0);
  const auto s1 = scratch_dir() / "a.svg", s2 = scratch_dir() / "b.svg";
  ASSERT_EQ(run_cli("plot " + report.string() + " -o " + s1.string()).status, 0);
  ASSERT_EQ(run_cli("plot " + report.string() + " -o " + s2.string()).status, 0);
  const auto svg = slurp(s1);
  EXPECT_EQ(svg, slurp(s2));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  const std::regex group("<g id=\"cycle-[0-9]+\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), group), std::sregex_iterator()), 2);
  EXPECT_NE(svg.find("right-arc"), std::string::npos);
  EXPECT_NE(svg.find("left-arc"), std::string::npos);
}

TEST(Cli, PlotOfEmptyReportHasOnlyTheLine) {
  const auto report = scratch_dir() / "prop4.json";
  ASSERT_EQ(run_cli("builtin prop4 -o " + report.string()).status, 0);
  const auto out = scratch_dir() / "empty.svg";
  ASSERT_EQ(run_cli("plot " + report.string() + " -o " + out.string()).status, 0);
  const auto svg = slurp(out);
  EXPECT_EQ(svg.find("cycle-"), std::string::npos);
  EXPECT_NE(svg.find("switching-line"), std::string::npos);
  EXPECT_EQ(run_cli("plot " + report.string()).status, 2);
  EXPECT_EQ(run_cli("plot " + report.string() + " -o /nonexistent-dir/x.svg").status, 2);
}

namespace {

struct RemoveScratch : ::testing::Environment {
  void TearDown() override { fs::remove_all(scratch_dir()); }
};

const auto* const kCleanup = ::testing::AddGlobalTestEnvironment(new RemoveScratch);

}  // namespace
