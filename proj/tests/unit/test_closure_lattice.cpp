#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"
#include "ccspace/closure_lattice.hpp"
#include "ccspace/error.hpp"
#include "oracles.hpp"

using namespace ccspace;

namespace {

RuleSystem tiny_cog() {
  Universe u = make_universe({"t", "a", "b", "e"}, {"t", "a", "b"}, {"t"});
  return RuleSystem(u, {{{1, 2}, 3}});
}

std::vector<std::vector<std::string>> labels(const Universe& u, const std::vector<SentenceSet>& f) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : f) out.push_back(u.labels_of(s));
  return out;
}

using L = std::vector<std::vector<std::string>>;

}  // namespace

TEST(Enumerate, TinyCogOverOmega) {
  const RuleSystem op = tiny_cog();
  const MooreFamily m = enumerate_deductive(op, op.universe().full_set());
  EXPECT_EQ(labels(op.universe(), m.members),
            (L{{"t"}, {"t", "a"}, {"t", "b"}, {"t", "e"}, {"t", "a", "e"}, {"t", "b", "e"}, {"t", "a", "b", "e"}}));
}

TEST(Enumerate, TinyCogOverC) {
  const RuleSystem op = tiny_cog();
  const MooreFamily m = enumerate_deductive(op, op.universe().cognitive());
  EXPECT_EQ(labels(op.universe(), m.members), (L{{"t"}, {"t", "a"}, {"t", "b"}}));
}

TEST(Enumerate, IdentityGivesPowerSet) {
  RuleSystem op(make_universe({"p", "q", "r"}, {"p"}, {}), {});
  EXPECT_EQ(enumerate_deductive(op, op.universe().full_set()).members.size(), 8u);
}

TEST(Enumerate, CapExceeded) {
  std::vector<std::string> s;
  for (int i = 0; i < 30; ++i) s.push_back("s" + std::to_string(i));
  RuleSystem op(make_universe(s, {}, {}), {});
  EXPECT_THROW(enumerate_deductive(op, op.universe().full_set()), CapExceeded);
}

TEST(Enumerate, MatchesBruteForceOnRandomSystems) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 60; ++round) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 10});
    const RuleSystem op = bridge::rule_system(sys);
    std::uniform_int_distribution<oracle::Mask> pick(0, oracle::full(sys.n));
    const oracle::Mask within = round % 2 ? oracle::full(sys.n) : pick(rng);
    const MooreFamily m = enumerate_deductive(op, bridge::set(sys, within));
    std::vector<oracle::Mask> got;
    for (const auto& s : m.members) got.push_back(s.to_mask());
    ASSERT_EQ(got, oracle::closed_subsets(sys, within)) << "round " << round;
  }
}

TEST(CognitiveClosure, TinyCog) {
  const RuleSystem op = tiny_cog();
  const Universe& u = op.universe();
  EXPECT_EQ(cognitive_closure(op, u.set_of({"a"})), u.set_of({"t", "a"}));
  EXPECT_EQ(cognitive_closure(op, u.empty_set()), u.set_of({"t"}));
  EXPECT_EQ(cognitive_closure(op, u.set_of({"t", "b"})), u.set_of({"t", "b"}));
}

TEST(CognitiveClosure, MatchesOracle) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 8});
    const RuleSystem op = bridge::rule_system(sys);
    for (oracle::Mask a = 0; a <= oracle::full(sys.n); ++a)
      ASSERT_EQ(cognitive_closure(op, bridge::set(sys, a)).to_mask(), oracle::cognitive_closure(sys, a));
  }
}

TEST(Cct, TinyCog) {
  const RuleSystem op = tiny_cog();
  const CctFamily tau = build_cct(op);
  EXPECT_EQ(labels(op.universe(), tau.members), (L{{"a"}, {"b"}, {"a", "b"}}));
  EXPECT_TRUE(tau.diagnostics.empty());
}

TEST(Cct, IdentityIsPowerSetWithDiagnostic) {
  RuleSystem op(make_universe({"p", "q", "r"}, {"p", "q"}, {}), {});
  const CctFamily tau = build_cct(op);
  EXPECT_EQ(tau.members.size(), 4u);
  bool flagged = false;
  for (const auto& d : tau.diagnostics) flagged |= d.code == "cognitive_conditions_violated";
  EXPECT_TRUE(flagged);
}

TEST(Cct, LogicOutsideCognitiveIsEmpty) {
  RuleSystem op(make_universe({"t", "a", "b"}, {"a", "b"}, {"t"}), {});
  EXPECT_TRUE(build_cct(op).members.empty());
}

TEST(Cct, MatchesOracle) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 60; ++round) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 10});
    const RuleSystem op = bridge::rule_system(sys);
    std::vector<oracle::Mask> got;
    for (const auto& s : build_cct(op).members) got.push_back(s.to_mask());
    ASSERT_EQ(got, oracle::cwo(sys));
  }
}

TEST(Theorems, TinyCog) {
  const RuleSystem op = tiny_cog();
  const TheoremReport r = check_structure_theorems(op, build_cct(op));
  EXPECT_EQ(r.at("t1").verdict, Verdict::pass);
  EXPECT_EQ(r.at("t2").verdict, Verdict::pass);
  EXPECT_EQ(r.at("t3").verdict, Verdict::pass);
  EXPECT_EQ(r.at("t3").witness.at(0).labels, (std::vector<std::string>{"t"}));
  EXPECT_EQ(r.at("t4").verdict, Verdict::pass);
  EXPECT_EQ(r.at("t4").witness.at(0).labels, (std::vector<std::string>{"a"}));
  EXPECT_EQ(r.at("t5").verdict, Verdict::pass);
  EXPECT_TRUE(r.clean());
  for (const char* id : {"prop_i", "prop_ii", "prop_iii", "prop_iv", "prop_v", "cl_equals_cn"})
    EXPECT_EQ(r.at(id).verdict, Verdict::pass) << id;
}

TEST(Theorems, PlainModeT3NotApplicable) {
  RuleSystem op(make_universe({"p", "q"}, {"p", "q"}, {}), {});
  const TheoremReport r = check_structure_theorems(op, build_cct(op));
  EXPECT_EQ(r.at("t3").verdict, Verdict::not_applicable);
  EXPECT_EQ(r.at("t3").note, "not applicable: Cn(∅)=∅");
}

TEST(Theorems, T4FailsWithoutProperDeductiveSubset) {
  // C = {t, a}, L = {t}, t -> a: only C itself is closed inside C, so τ = {∅}
  RuleSystem op(make_universe({"t", "a", "z"}, {"t", "a"}, {"t"}), {{{0}, 1}, {{0, 1}, 2}});
  const TheoremReport r = check_structure_theorems(op, build_cct(op));
  EXPECT_EQ(r.at("t4").verdict, Verdict::fail);
  EXPECT_EQ(r.at("t4").note, "fails: no proper deductive subset of C");
}

TEST(Theorems, AlwaysHoldOnRandomRuleSystems) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 40; ++round) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 8});
    const RuleSystem op = bridge::rule_system(sys);
    const TheoremReport r = check_structure_theorems(op, build_cct(op));
    for (const char* id : {"t1", "t2", "cl_equals_cn", "prop_i", "prop_ii", "prop_iii", "prop_iv", "prop_v"})
      ASSERT_FALSE(r.at(id).failed()) << id << " round " << round;
  }
}
