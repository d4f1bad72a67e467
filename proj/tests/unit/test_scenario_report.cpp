#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccspace/report.hpp"
#include "ccspace/scenario.hpp"

using namespace ccspace;

namespace {

std::string fixture(const std::string& name) { return std::string(CCSPACE_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunOptions structured() {
  RunOptions o;
  o.format = ReportFormat::structured;
  return o;
}

}  // namespace

TEST(Scenario, RoundTripFixtures) {
  for (const char* name : {"tiny-cog.scenario.json", "plain-mode.scenario.json", "quadratic.scenario.json"}) {
    const Scenario s = parse_scenario(slurp(fixture(name)));
    const std::string once = emit_scenario(s);
    EXPECT_EQ(parse_scenario(once), s) << name;
    EXPECT_EQ(emit_scenario(parse_scenario(once)), once) << name;
  }
}

TEST(Scenario, RejectsBadDocuments) {
  EXPECT_THROW(parse_scenario("{"), ScenarioError);
  EXPECT_THROW(parse_scenario(R"({"universe": {"symbols": [], "cognitive": [], "logic_base": []}})"),
               ScenarioError);
  EXPECT_THROW(parse_scenario(R"({"version": 99, "universe": {"symbols": ["a"], "cognitive": [], "logic_base": []}})"),
               ScenarioError);
  EXPECT_THROW(parse_scenario(R"({"version": 1, "colour": 1, "universe": {"symbols": ["a"], "cognitive": [], "logic_base": []}})"),
               ScenarioError);
}

TEST(Scenario, IntegrityListsEveryProblem) {
  Scenario s = parse_scenario(slurp(fixture("plain-mode.scenario.json")));
  s.rules.push_back({{"nope"}, "p"});
  s.queries.push_back({"ghost"});
  const auto problems = integrity_problems(s);
  EXPECT_GE(problems.size(), 2u);
  EXPECT_THROW(resolve(s), ScenarioError);
}

TEST(Scenario, ResolveTinyCog) {
  const Workspace w = resolve(parse_scenario(slurp(fixture("tiny-cog.scenario.json"))));
  EXPECT_EQ(w.universe.size(), 4u);
  ASSERT_TRUE(w.metric.has_value());
  EXPECT_EQ(w.sequences.size(), 2u);
  EXPECT_TRUE(w.environment.has_value());
  EXPECT_EQ(w.epsilons.size(), 2u);
}

TEST(Run, TheoremsTinyCog) {
  const RunResult r = run("theorems", fixture("tiny-cog.scenario.json"), structured());
  EXPECT_EQ(r.exit_code, 0) << r.error;
  EXPECT_NE(r.output.find("\"t1\": \"pass\""), std::string::npos);
  EXPECT_NE(r.output.find("[\"t\"]"), std::string::npos);
  EXPECT_NE(r.output.find("\"t5\": \"pass\""), std::string::npos);
}

TEST(Run, ExitCodes) {
  const std::string plain = fixture("plain-mode.scenario.json");
  RunOptions o;
  EXPECT_EQ(run("validate", plain, o).exit_code, 0);
  o.strict = true;
  EXPECT_EQ(run("validate", plain, o).exit_code, 2);
  EXPECT_EQ(run("closures", fixture("missing.scenario.json"), o).exit_code, 3);

  const auto dir = std::filesystem::temp_directory_path() / "ccspace-unit";
  std::filesystem::create_directories(dir);
  const auto bad = (dir / "bad.json").string();
  std::ofstream(bad) << R"({"version": 1, "universe": {"symbols": ["a"], "cognitive": ["z"], "logic_base": []}})";
  const RunResult r = run("validate", bad, {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.error.empty());
  EXPECT_EQ(run("bogus", plain, {}).exit_code, 1);
}

TEST(Run, Deterministic) {
  for (auto fmt : {ReportFormat::text, ReportFormat::structured}) {
    RunOptions o;
    o.format = fmt;
    const RunResult a = run("all", fixture("tiny-cog.scenario.json"), o);
    const RunResult b = run("all", fixture("tiny-cog.scenario.json"), o);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
  }
}

TEST(Report, FloatFormatting) {
  Report r;
  r.tree["x"] = 0.2;
  EXPECT_NE(emit_report(r, ReportFormat::structured).find("0.200000000"), std::string::npos);
}

TEST(Report, StructuredKeysSorted) {
  Report r;
  r.tree["zeta"] = 1;
  r.tree["alpha"] = 2;
  const std::string s = emit_report(r, ReportFormat::structured);
  EXPECT_LT(s.find("alpha"), s.find("zeta"));
  EXPECT_EQ(s.back(), '\n');
}

TEST(Report, Sha256) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Run, QuadraticLimits) {
  const RunResult r = run("limits", fixture("quadratic.scenario.json"), structured());
  EXPECT_EQ(r.exit_code, 0) << r.error;
  EXPECT_NE(r.output.find("0.200000000"), std::string::npos);
}

TEST(Run, AllTinyCogKeyValues) {
  const RunResult r = run("all", fixture("tiny-cog.scenario.json"), structured());
  ASSERT_EQ(r.exit_code, 0) << r.error;
  const auto j = nlohmann::json::parse(r.output);
  using V = std::vector<std::vector<std::string>>;
  EXPECT_EQ(j["cct"]["tau"]["members"].get<V>(), (V{{"a"}, {"b"}, {"a", "b"}}));
  EXPECT_EQ(j["theorems"]["details"]["t3"]["witness"][0]["labels"].get<std::vector<std::string>>(),
            (std::vector<std::string>{"t"}));
  EXPECT_EQ(j["families"]["fhat"][0]["members"].get<V>(), (V{{"a", "b"}, {"t", "a", "b"}}));
  EXPECT_EQ(j["families"]["fd"][0]["members"].get<V>(), (V{{"t", "a"}}));
  const auto& holes = j["blackhole"]["black_holes"];
  ASSERT_EQ(holes.size(), 1u);
  EXPECT_EQ(holes[0]["sequence"], "truncated");
  EXPECT_EQ(holes[0]["k"], 1);
}
