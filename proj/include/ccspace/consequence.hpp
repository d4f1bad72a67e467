#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ccspace/check.hpp"
#include "ccspace/sentence_set.hpp"
#include "ccspace/universe.hpp"

namespace ccspace {

/// A consequence operator Cn over the subsets of a universe.
class ConsequenceOperator {
 public:
  virtual ~ConsequenceOperator() = default;

  virtual const Universe& universe() const noexcept = 0;
  virtual SentenceSet close(const SentenceSet& a) const = 0;
  /// Rule systems satisfy inclusion, monotonicity, idempotence and
  /// finitariness by construction; tables must be checked literally.
  virtual bool structurally_tarskian() const noexcept = 0;
};

/// Horn rule: every premise present implies the conclusion.
/// An empty premise list makes the conclusion part of every closure.
struct Rule {
  std::vector<std::size_t> premises;
  std::size_t conclusion = 0;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Closure plus, for every derived sentence, the rule that first produced it.
struct Derivation {
  static constexpr std::uint32_t kGiven = 0xffffffffU;

  SentenceSet closure;
  /// Indexed by sentence; kGiven for members of A or L and for non-members.
  std::vector<std::uint32_t> derived_by;
};

/// Cn(A) as the least fixpoint of A ∪ L under a set of Horn rules.
///
/// Evaluation is semi-naive: every rule keeps a count of missing premises and
/// only rules watching a newly derived sentence are touched, so one closure
/// costs O(|A ∪ L| + sum of premise sizes of the fired rules).
class RuleSystem final : public ConsequenceOperator {
 public:
  /// Premise lists are sorted and deduplicated. Throws std::invalid_argument
  /// for positions outside the universe.
  RuleSystem(Universe universe, std::vector<Rule> rules);

  const Universe& universe() const noexcept override { return universe_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }

  SentenceSet close(const SentenceSet& a) const override;
  Derivation close_traced(const SentenceSet& a) const;

  /// Members of `a` that the derivation of `x` relies on. The result B
  /// satisfies x ∈ close(B) whenever x ∈ close(a).
  SentenceSet support(const Derivation& d, const SentenceSet& a, std::size_t x) const;

  bool structurally_tarskian() const noexcept override { return true; }

 private:
  template <typename OnDerive>
  SentenceSet run(const SentenceSet& a, OnDerive&& on_derive) const;

  Universe universe_;
  std::vector<Rule> rules_;
  std::vector<std::uint32_t> premise_count_;
  std::vector<std::vector<std::uint32_t>> watchers_;
  std::vector<std::uint32_t> unconditional_;
};

/// Explicit closure table over every subset of a universe of at most 16
/// sentences. Used to construct operators that violate the axioms.
class TableOperator final : public ConsequenceOperator {
 public:
  static constexpr std::size_t kMaxSymbols = 16;

  /// `table[mask]` is the image of the subset with bit i set for sentence i.
  TableOperator(Universe universe, std::vector<SentenceSet> table);

  /// Identity table with selected entries overridden.
  static TableOperator identity_with(Universe universe,
                                     std::span<const std::pair<SentenceSet, SentenceSet>> overrides);

  const Universe& universe() const noexcept override { return universe_; }
  SentenceSet close(const SentenceSet& a) const override;
  bool structurally_tarskian() const noexcept override { return false; }

 private:
  Universe universe_;
  std::vector<SentenceSet> table_;
};

bool is_deductive(const ConsequenceOperator& op, const SentenceSet& a);

/// Scenario-supplied pairing (X, Y) -> sentence read as "X ⇒ Y".
struct Implication {
  std::size_t antecedent = 0;
  std::size_t consequent = 0;
  std::size_t sentence = 0;
};

enum class ValidationMode { automatic, exhaustive, sampled };

struct ValidationOptions {
  ValidationMode mode = ValidationMode::automatic;
  std::size_t exhaustive_limit = 14;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

struct AxiomReport {
  ValidationMode mode = ValidationMode::exhaustive;
  /// Ids: axiom_i .. axiom_vi.
  CheckReport axioms;
  /// Ids: cn_empty_nonempty, cn_cognitive_not_closed.
  CheckReport cognitive;

  bool axioms_hold() const { return axioms.clean(); }
  bool cognitive_conditions_hold() const { return cognitive.clean(); }
};

/// Checks the consequence axioms and the cognitive conditions. Exhaustive
/// mode covers every subset and needs |Omega| <= exhaustive_limit (throws
/// CapExceeded when requested beyond it); sampled mode draws random subsets.
/// The deduction axiom is only evaluated when `implications` is non-empty.
AxiomReport validate_operator(const ConsequenceOperator& op,
                              std::span<const Implication> implications = {},
                              const ValidationOptions& options = {});

}  // namespace ccspace
