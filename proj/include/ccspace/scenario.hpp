#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccspace/cognition_metric.hpp"
#include "ccspace/consequence.hpp"
#include "ccspace/environment.hpp"
#include "ccspace/families.hpp"
#include "ccspace/universe.hpp"

namespace ccspace {

inline constexpr int kScenarioVersion = 1;

using Labels = std::vector<std::string>;

/// Malformed document or broken referential integrity. Every problem found
/// is listed, not just the first.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

namespace scenario {

struct UniverseBlock {
  Labels symbols;
  Labels cognitive;
  Labels logic_base;
  friend bool operator==(const UniverseBlock&, const UniverseBlock&) = default;
};

struct RuleSpec {
  Labels premises;
  std::string conclusion;
  friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

struct ImplicationSpec {
  std::string antecedent;
  std::string consequent;
  std::string sentence;
  friend bool operator==(const ImplicationSpec&, const ImplicationSpec&) = default;
};

struct SequenceSpec {
  std::string name;
  Labels items;
  std::optional<std::string> virtual_limit;
  bool constant_tail = false;
  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

struct GraphSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string f_star;
  std::optional<Labels> within;
  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct FdSpec {
  Labels domain;
  std::string f;
  friend bool operator==(const FdSpec&, const FdSpec&) = default;
};

struct ExplicitFamilySpec {
  std::string name;
  std::string kind;
  Labels domain;
  std::vector<Labels> members;
  friend bool operator==(const ExplicitFamilySpec&, const ExplicitFamilySpec&) = default;
};

struct FamiliesBlock {
  std::vector<GraphSpec> graphs;
  std::optional<Labels> truths;
  Labels fhat;
  std::vector<FdSpec> fd;
  std::vector<ExplicitFamilySpec> explicit_families;
  friend bool operator==(const FamiliesBlock&, const FamiliesBlock&) = default;
};

struct ProbeSpec {
  std::string sequence;
  std::string x;
  double epsilon = 0;
  std::optional<Labels> region;
  friend bool operator==(const ProbeSpec&, const ProbeSpec&) = default;
};

struct BlackholeBlock {
  Labels solution_space;
  std::vector<double> epsilon_grid;
  std::vector<ProbeSpec> probes;
  friend bool operator==(const BlackholeBlock&, const BlackholeBlock&) = default;
};

struct BaseSpec {
  std::string name;
  Labels members;
  std::string tag = "complete";
  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

struct EnvironmentBlock {
  Labels points;
  std::vector<BaseSpec> base;
  std::vector<Labels> practical_wholes;
  std::vector<std::pair<std::string, std::string>> map;
  friend bool operator==(const EnvironmentBlock&, const EnvironmentBlock&) = default;
};

struct Parameters {
  std::vector<double> epsilon;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> family_cap;
  std::optional<double> tol_eq;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> limit_point_min;
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

}  // namespace scenario

struct Scenario {
  int version = kScenarioVersion;
  std::string name;
  scenario::UniverseBlock universe;
  std::vector<scenario::RuleSpec> rules;
  std::vector<scenario::ImplicationSpec> implications;
  std::optional<std::vector<std::pair<std::string, double>>> weights;
  std::optional<std::vector<std::vector<double>>> matrix;
  std::vector<scenario::SequenceSpec> sequences;
  std::vector<Labels> queries;
  std::optional<scenario::FamiliesBlock> families;
  std::optional<scenario::BlackholeBlock> blackhole;
  std::optional<scenario::EnvironmentBlock> environment;
  scenario::Parameters parameters;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses a JSON scenario document. Throws ScenarioError on syntax errors,
/// unknown keys, wrong types, a missing or unsupported version.
Scenario parse_scenario(const std::string& text);

/// Canonical JSON rendering; parse_scenario(emit_scenario(s)) == s.
std::string emit_scenario(const Scenario& s);

/// Lists every label that is used but not declared, plus structural
/// problems (duplicate names, non-square matrix, missing weights, ...).
std::vector<std::string> integrity_problems(const Scenario& s);

/// Resolved scenario: library objects built from the document.
struct Workspace {
  Universe universe;
  std::unique_ptr<RuleSystem> op;
  std::vector<Implication> implications;
  std::optional<PseudoMetric> metric;
  std::vector<ThoughtSequence> sequences;
  std::optional<Environment> environment;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t family_cap = kDefaultFamilyCap;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Measure tolerance = kDefaultEqualityTolerance;
  std::vector<Measure> epsilons;
  std::optional<std::size_t> limit_point_min;
};

/// Throws ScenarioError when integrity_problems is non-empty.
Workspace resolve(const Scenario& s);

}  // namespace ccspace
