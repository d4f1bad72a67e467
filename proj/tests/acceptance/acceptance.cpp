// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bridge.hpp"
#include "ccspace/closure_lattice.hpp"
#include "ccspace/cognition_metric.hpp"
#include "ccspace/families.hpp"
#include "ccspace/report.hpp"
#include "oracles.hpp"

using namespace ccspace;
using oracle::Mask;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Measure M(double v) { return Measure::from_double(v); }

std::vector<Mask> masks(const std::vector<SentenceSet>& f) {
  std::vector<Mask> out;
  for (const auto& s : f) out.push_back(s.to_mask());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome quadratic() {
  const auto t0 = Clock::now();
  const Universe u = make_universe({"x1", "x2", "x3", "x4", "x5", "x6", "x7"},
                                   {"x1", "x2", "x3", "x4", "x5", "x6", "x7"}, {});
  const auto metric =
      PseudoMetric::from_weights({M(0.1), M(0.3), M(0.5), M(0.7), M(0.85), M(0.9), M(1.0)});
  const bool dist = metric.cog(0, 1) == M(0.2);
  const bool b = ball(metric, 6, M(0.2)) == u.set_of({"x5", "x6", "x7"});
  const ThoughtSequence seq{"solve", {0, 1, 2, 3, 4, 5, 6}, 6, false};
  const LimitReport r = detect_limits(metric, seq, M(0.2));
  const bool lim = r.limits.contains(6) && r.candidates[6].onset == std::size_t{5};
  const double ms = ms_since(t0);
  Outcome o{dist && b && lim && ms < 10.0, {}};
  o.detail = "cog(x1,x2)=0.2 " + std::string(dist ? "yes" : "no") + ", ball(x7,0.2) " +
             (b ? "ok" : "wrong") + ", x7 onset 5 " + (lim ? "yes" : "no") + ", " +
             std::to_string(ms) + " ms";
  return o;
}

Outcome closure_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2);
  std::size_t mismatches = 0, subsets = 0;
  for (int i = 0; i < 500; ++i) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 12, .max_rules = 30});
    const RuleSystem op = bridge::rule_system(sys);
    for (Mask a = 0; a <= oracle::full(sys.n); ++a, ++subsets)
      if (op.close(bridge::set(sys, a)).to_mask() != oracle::close(sys, a)) ++mismatches;
  }
  const double s = ms_since(t0) / 1000;
  return {mismatches == 0 && s < 60, std::to_string(subsets) + " subsets, " +
                                          std::to_string(mismatches) + " mismatches, " +
                                          std::to_string(s) + " s"};
}

Outcome cl_equals_cn() {
  std::mt19937_64 rng(3);
  std::size_t mismatches = 0, subsets = 0;
  for (int i = 0; i < 200; ++i) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 10});
    const RuleSystem op = bridge::rule_system(sys);
    for (Mask a = 0; a <= oracle::full(sys.n); ++a, ++subsets) {
      const Mask cl = cognitive_closure(op, bridge::set(sys, a)).to_mask();
      if (cl != op.close(bridge::set(sys, a)).to_mask() || cl != oracle::cognitive_closure(sys, a))
        ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(subsets) + " subsets, " + std::to_string(mismatches) + " mismatches"};
}

Outcome union_closure() {
  std::mt19937_64 rng(4);
  std::size_t systems = 0, failures = 0, unions = 0;
  while (systems < 200) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 10});
    const RuleSystem op = bridge::rule_system(sys);
    const CctFamily tau = build_cct(op);
    if (tau.members.empty()) continue;
    ++systems;
    const auto members = masks(tau.members);
    if (members != oracle::cwo(sys)) ++failures;
    // CWO membership decided by the oracle: subset of C with closed complement
    auto in_tau = [&](Mask m) { return (m & ~sys.cognitive) == 0 && oracle::closed(sys, sys.cognitive & ~m); };
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j, ++unions)
        if (!in_tau(members[i] | members[j])) ++failures;
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int s = 0; s < 1000; ++s, ++unions) {
      const std::size_t k = 2 + rng() % 4;
      Mask u = 0;
      for (std::size_t j = 0; j < k; ++j) u |= members[pick(rng)];
      if (!in_tau(u)) ++failures;
    }
    if (check_union_closure(op, tau).verdict != Verdict::pass) ++failures;
  }
  return {failures == 0, std::to_string(systems) + " systems, " + std::to_string(unions) + " unions, " +
                             std::to_string(failures) + " failures"};
}

Outcome t3_t5() {
  std::mt19937_64 rng(5);
  std::size_t systems = 0, failures = 0, generated = 0, empty_c = 0;
  while (systems < 300 && generated < 100000) {
    ++generated;
    const auto sys = oracle::random_system(rng, {.min_symbols = 2, .max_symbols = 10, .logic_density = 0.3});
    if (sys.logic == 0 || oracle::closed(sys, sys.cognitive)) continue;
    if (sys.cognitive == 0) {
      ++empty_c;
      continue;
    }
    ++systems;
    const RuleSystem op = bridge::rule_system(sys);
    Mask covered = 0;
    for (Mask m : oracle::cwo(sys)) covered |= m;
    if ((sys.cognitive & ~covered) == 0) ++failures;
    for (Mask a : oracle::closed_subsets(sys, sys.cognitive))
      if (oracle::closed(sys, sys.cognitive & ~a)) {
        ++failures;
        break;
      }
    const CctFamily tau = build_cct(op);
    if (check_uncovered_sentence(op, tau).verdict != Verdict::pass) ++failures;
    if (check_no_complementary_pair(op, tau).verdict != Verdict::pass) ++failures;
  }
  return {failures == 0 && systems > 0,
          std::to_string(systems) + " qualifying systems with C non-empty, " + std::to_string(failures) +
              " failures (" + std::to_string(empty_c) + " systems with C empty skipped)"};
}

Outcome moore() {
  std::mt19937_64 rng(6);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto sys = oracle::random_system(rng, {.max_symbols = 12});
    const RuleSystem op = bridge::rule_system(sys);
    const Mask within = i % 3 == 0 ? oracle::full(sys.n) : (rng() & oracle::full(sys.n));
    const MooreFamily m = enumerate_deductive(op, bridge::set(sys, within));
    std::vector<Mask> got;
    for (const auto& s : m.members) got.push_back(s.to_mask());  // lectic order is integer order here
    if (got != oracle::closed_subsets(sys, within)) ++mismatches;
  }
  return {mismatches == 0, "200 systems, " + std::to_string(mismatches) + " mismatches"};
}

Outcome fhat() {
  std::mt19937_64 rng(7);
  std::size_t systems = 0, filters = 0, upward_failures = 0, discrepancies = 0, crashes = 0, wrong = 0;
  while (systems < 100) {
    auto sys = oracle::random_system(rng, {.max_symbols = 12});
    if (__builtin_popcountll(sys.cognitive) > 10) continue;
    ++systems;
    const RuleSystem op = bridge::rule_system(sys);
    for (auto f : oracle::bits(oracle::close(sys, sys.cognitive))) {
      ++filters;
      try {
        const FamilyConstruction c = build_fhat_filter(op, f);
        std::vector<Mask> expect;
        for (Mask a : oracle::closed_subsets({sys.n, 0, 0, {}}, sys.cognitive))
          if ((oracle::close(sys, a) >> f) & 1U) expect.push_back(a);
        if (masks(c.family.members) != expect) ++wrong;
        if (c.classic.at("upward").verdict != Verdict::pass) ++upward_failures;
        const Verdict inter = c.classic.at("intersection").verdict;
        if (inter == Verdict::discrepancy) ++discrepancies;
        if (inter == Verdict::fail) ++wrong;
      } catch (...) {
        ++crashes;
      }
    }
  }
  return {upward_failures == 0 && crashes == 0 && wrong == 0,
          std::to_string(filters) + " filters, upward failures " + std::to_string(upward_failures) +
              ", intersection discrepancies " + std::to_string(discrepancies) + ", crashes " +
              std::to_string(crashes) + ", family mismatches " + std::to_string(wrong)};
}

Outcome black_hole() {
  std::mt19937_64 rng(8);
  std::size_t tuples = 0, violations = 0, tries = 0;
  while (tuples < 1000 && tries < 1000000) {
    ++tries;
    const std::size_t n = 2 + rng() % 9;
    std::vector<Measure> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(Measure::from_ticks(std::int64_t(rng() % 21) * 50'000'000'000));
    const auto metric = PseudoMetric::from_weights(w);
    ThoughtSequence seq{"s", {}, std::nullopt, false};
    const std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i) seq.items.push_back(rng() % n);
    const std::size_t x = rng() % n;
    const Measure eps = Measure::from_ticks(std::int64_t(1 + rng() % 19) * 50'000'000'000);
    SentenceSet region = ball(metric, x, eps);
    for (std::size_t i = 0; i < n; ++i)
      if (rng() % 3 == 0) region.insert(i);
    if (rng() % 10 == 0) region = SentenceSet::from_mask(n, rng() & oracle::full(n));
    if (!detect_black_hole(metric, seq, x, eps, region)) continue;
    ++tuples;
    if (detect_limits(metric, seq, eps).limits.contains(x)) ++violations;
  }
  return {tuples == 1000 && violations == 0,
          std::to_string(tuples) + " black-hole tuples, " + std::to_string(violations) + " violations"};
}

Outcome golden() {
  const std::string dir = CCSPACE_FIXTURES;
  std::ifstream in(dir + "/tiny-cog.all.golden", std::ios::binary);
  if (!in) return {false, "golden file missing"};
  std::ostringstream ss;
  ss << in.rdbuf();
  RunOptions o;
  o.format = ReportFormat::structured;
  const RunResult r = run("all", dir + "/tiny-cog.scenario.json", o);
  const bool same = r.exit_code == 0 && r.output == ss.str();
  return {same, same ? "byte-identical (" + std::to_string(r.output.size()) + " bytes)"
                     : "output differs from golden (exit " + std::to_string(r.exit_code) + ")"};
}

Outcome performance() {
  std::mt19937_64 rng(10);
  const std::size_t n = 10000;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(oracle::label(i));
  std::vector<Rule> rules;
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  for (std::size_t r = 0; r < 100000; ++r) {
    Rule rule;
    const std::size_t k = r < 50 ? 0 : 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) rule.premises.push_back(pos(rng));
    rule.conclusion = pos(rng);
    rules.push_back(rule);
  }
  const std::vector<Rule> copy = rules;
  RuleSystem op(make_universe(labels, {}, {}), std::move(rules));
  SentenceSet seed(n);
  for (int i = 0; i < 20; ++i) seed.insert(pos(rng));
  auto t0 = Clock::now();
  const SentenceSet closed = op.close(seed);
  const double close_ms = ms_since(t0);

  // naive rescan check
  std::vector<char> have(n, 0);
  for (auto i : seed.elements()) have[i] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : copy) {
      if (have[r.conclusion]) continue;
      bool fire = true;
      for (auto p : r.premises) fire = fire && have[p];
      if (fire) have[r.conclusion] = changed = true;
    }
  }
  bool agree = true;
  for (std::size_t i = 0; i < n; ++i) agree = agree && (closed.contains(i) == bool(have[i]));

  // 8 free symbols and a 12-symbol implication chain: 2^8 * 13 closed sets
  std::vector<std::string> small;
  for (std::size_t i = 0; i < 20; ++i) small.push_back(oracle::label(i));
  std::vector<Rule> chain;
  for (std::size_t i = 8; i + 1 < 20; ++i) chain.push_back({{i}, i + 1});
  RuleSystem chained(make_universe(small, {}, {}), std::move(chain));
  t0 = Clock::now();
  const MooreFamily m = enumerate_deductive(chained, chained.universe().full_set());
  const double enum_ms = ms_since(t0);
  const bool ok = agree && close_ms < 1000 && m.members.size() == 3328 && enum_ms < 5000;
  return {ok, "close " + std::to_string(close_ms) + " ms (" + std::to_string(closed.count()) +
                  " derived, naive agrees " + (agree ? "yes" : "no") + "), enumeration " +
                  std::to_string(m.members.size()) + " sets in " + std::to_string(enum_ms) + " ms"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"quadratic example", quadratic},
      {"closure oracle equivalence", closure_oracle},
      {"cognitive closure equals Cn", cl_equals_cn},
      {"CWO union closure", union_closure},
      {"uncovered sentence and no complementary pair", t3_t5},
      {"Moore family enumeration", moore},
      {"f-hat upward closure", fhat},
      {"no limit at a black hole", black_hole},
      {"tiny-cog golden report", golden},
      {"performance", performance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
