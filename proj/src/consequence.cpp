#include "ccspace/consequence.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "ccspace/error.hpp"

namespace ccspace {

RuleSystem::RuleSystem(Universe universe, std::vector<Rule> rules)
    : universe_(std::move(universe)), rules_(std::move(rules)) {
  const std::size_t n = universe_.size();
  if (rules_.size() >= Derivation::kGiven)
    throw std::invalid_argument("too many rules");
  watchers_.resize(n);
  premise_count_.reserve(rules_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    Rule& rule = rules_[r];
    if (rule.conclusion >= n)
      throw std::invalid_argument("rule " + std::to_string(r) + ": conclusion outside universe");
    std::sort(rule.premises.begin(), rule.premises.end());
    rule.premises.erase(std::unique(rule.premises.begin(), rule.premises.end()),
                        rule.premises.end());
    for (auto p : rule.premises) {
      if (p >= n)
        throw std::invalid_argument("rule " + std::to_string(r) + ": premise outside universe");
      watchers_[p].push_back(static_cast<std::uint32_t>(r));
    }
    premise_count_.push_back(static_cast<std::uint32_t>(rule.premises.size()));
    if (rule.premises.empty()) unconditional_.push_back(static_cast<std::uint32_t>(r));
  }
}

template <typename OnDerive>
SentenceSet RuleSystem::run(const SentenceSet& a, OnDerive&& on_derive) const {
  if (a.width() != universe_.size())
    throw std::invalid_argument("close: set does not belong to this universe");
  SentenceSet result = a | universe_.logic_base();
  std::vector<std::uint32_t> missing = premise_count_;
  std::vector<std::size_t> agenda = result.elements();
  agenda.reserve(universe_.size());

  auto derive = [&](std::uint32_t r) {
    const std::size_t c = rules_[r].conclusion;
    if (!result.contains(c)) {
      result.insert(c);
      agenda.push_back(c);
      on_derive(c, r);
    }
  };

  for (auto r : unconditional_) derive(r);
  for (std::size_t next = 0; next < agenda.size(); ++next) {
    for (auto r : watchers_[agenda[next]])
      if (--missing[r] == 0) derive(r);
  }
  return result;
}

SentenceSet RuleSystem::close(const SentenceSet& a) const {
  return run(a, [](std::size_t, std::uint32_t) {});
}

Derivation RuleSystem::close_traced(const SentenceSet& a) const {
  Derivation d;
  d.derived_by.assign(universe_.size(), Derivation::kGiven);
  d.closure = run(a, [&](std::size_t c, std::uint32_t r) { d.derived_by[c] = r; });
  return d;
}

SentenceSet RuleSystem::support(const Derivation& d, const SentenceSet& a,
                                std::size_t x) const {
  SentenceSet out = universe_.empty_set();
  SentenceSet seen = universe_.empty_set();
  std::vector<std::size_t> stack{x};
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    if (seen.contains(s)) continue;
    seen.insert(s);
    if (d.derived_by[s] == Derivation::kGiven) {
      if (a.contains(s) && !universe_.logic_base().contains(s)) out.insert(s);
      continue;
    }
    for (auto p : rules_[d.derived_by[s]].premises) stack.push_back(p);
  }
  return out;
}

TableOperator::TableOperator(Universe universe, std::vector<SentenceSet> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
  const std::size_t n = universe_.size();
  if (n > kMaxSymbols)
    throw CapExceeded("table operators are limited to " + std::to_string(kMaxSymbols) +
                      " sentences");
  if (table_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("closure table must have one entry per subset");
  for (const auto& entry : table_)
    if (entry.width() != n) throw std::invalid_argument("closure table entry has wrong width");
}

TableOperator TableOperator::identity_with(
    Universe universe, std::span<const std::pair<SentenceSet, SentenceSet>> overrides) {
  const std::size_t n = universe.size();
  if (n > kMaxSymbols)
    throw CapExceeded("table operators are limited to " + std::to_string(kMaxSymbols) +
                      " sentences");
  std::vector<SentenceSet> table;
  table.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    table.push_back(SentenceSet::from_mask(n, m));
  for (const auto& [from, to] : overrides) table.at(from.to_mask()) = to;
  return TableOperator(std::move(universe), std::move(table));
}

SentenceSet TableOperator::close(const SentenceSet& a) const {
  if (a.width() != universe_.size())
    throw std::invalid_argument("close: set does not belong to this universe");
  return table_[a.to_mask()];
}

bool is_deductive(const ConsequenceOperator& op, const SentenceSet& a) {
  return op.close(a) == a;
}

namespace {

NamedSet named(const Universe& u, std::string role, const SentenceSet& s) {
  return {std::move(role), u.labels_of(s)};
}

NamedSet named_sentence(const Universe& u, std::string role, std::size_t x) {
  return {std::move(role), {u.label(x)}};
}

class SubsetSource {
 public:
  SubsetSource(std::size_t n, bool exhaustive, std::size_t samples, std::uint64_t seed)
      : n_(n), exhaustive_(exhaustive), samples_(samples), rng_(seed) {}

  std::size_t size() const {
    return exhaustive_ ? (std::size_t{1} << n_) : samples_;
  }

  SentenceSet at(std::size_t k) {
    if (exhaustive_) return SentenceSet::from_mask(n_, k);
    return random_set();
  }

  SentenceSet random_set() {
    SentenceSet s(n_);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n_; ++i)
      if (coin(rng_)) s.insert(i);
    return s;
  }

 private:
  std::size_t n_;
  bool exhaustive_;
  std::size_t samples_;
  std::mt19937_64 rng_;
};

Check pass(std::string id, std::string note = {}) {
  return {std::move(id), Verdict::pass, std::move(note), {}};
}

}  // namespace

AxiomReport validate_operator(const ConsequenceOperator& op,
                              std::span<const Implication> implications,
                              const ValidationOptions& options) {
  const Universe& u = op.universe();
  const std::size_t n = u.size();
  const bool fits = n <= options.exhaustive_limit && n < 63;
  if (options.mode == ValidationMode::exhaustive && !fits)
    throw CapExceeded("exhaustive validation requested for " + std::to_string(n) +
                      " sentences; limit is " + std::to_string(options.exhaustive_limit));
  const bool exhaustive = options.mode == ValidationMode::exhaustive ||
                          (options.mode == ValidationMode::automatic && fits);

  AxiomReport report;
  report.mode = exhaustive ? ValidationMode::exhaustive : ValidationMode::sampled;
  const std::string scope = exhaustive
                                ? "exhaustive over " + std::to_string(std::size_t{1} << n) + " subsets"
                                : "sampled " + std::to_string(options.samples) + " subsets";

  // Exhaustive mode reads closures from a table built once.
  std::vector<SentenceSet> table;
  if (exhaustive) {
    table.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      table.push_back(op.close(SentenceSet::from_mask(n, m)));
  }
  auto closure = [&](const SentenceSet& s) {
    return exhaustive ? table[s.to_mask()] : op.close(s);
  };

  SubsetSource source(n, exhaustive, options.samples, options.seed);
  Check inclusion = pass("axiom_ii", scope);
  Check monotone = pass("axiom_iii", scope);
  Check idempotent = pass("axiom_iv", scope);
  Check finitary = pass("axiom_v", scope);
  Check deduction{"axiom_vi", Verdict::not_evaluated,
                  "no implication pairing supplied; deduction theorem not evaluated", {}};
  if (!implications.empty()) deduction = pass("axiom_vi", scope);

  const auto* rules = dynamic_cast<const RuleSystem*>(&op);
  if (!rules)
    finitary.note = "every subset of a finite universe is finite; " + scope;

  std::bernoulli_distribution coin(0.5);
  std::mt19937_64 extra(options.seed ^ 0x5bd1e995ULL);

  for (std::size_t k = 0; k < source.size(); ++k) {
    const SentenceSet a = source.at(k);
    const SentenceSet ca = closure(a);

    if (inclusion.verdict == Verdict::pass && !a.is_subset_of(ca)) {
      inclusion.verdict = Verdict::fail;
      inclusion.note = "A is not contained in Cn(A)";
      inclusion.witness = {named(u, "A", a), named(u, "Cn(A)", ca)};
    }

    if (monotone.verdict == Verdict::pass) {
      // Single-element extensions generate every inclusion A ⊆ B by chaining.
      auto probe = [&](const SentenceSet& b) {
        const SentenceSet cb = closure(b);
        if (!ca.is_subset_of(cb)) {
          monotone.verdict = Verdict::fail;
          monotone.note = "A ⊆ B but Cn(A) ⊄ Cn(B)";
          monotone.witness = {named(u, "A", a), named(u, "B", b)};
        }
      };
      if (exhaustive) {
        for (std::size_t i = 0; i < n && monotone.verdict == Verdict::pass; ++i)
          if (!a.contains(i)) {
            SentenceSet b = a;
            b.insert(i);
            probe(b);
          }
      } else {
        SentenceSet b = a;
        for (std::size_t i = 0; i < n; ++i)
          if (coin(extra)) b.insert(i);
        probe(b);
      }
    }

    if (idempotent.verdict == Verdict::pass) {
      const SentenceSet cca = closure(ca);
      if (cca != ca) {
        idempotent.verdict = Verdict::fail;
        idempotent.note = "Cn(Cn(A)) differs from Cn(A)";
        idempotent.witness = {named(u, "A", a), named(u, "Cn(A)", ca),
                              named(u, "Cn(Cn(A))", cca)};
      }
    }

    if (rules && finitary.verdict == Verdict::pass) {
      const Derivation d = rules->close_traced(a);
      d.closure.for_each([&](std::size_t x) {
        if (finitary.verdict != Verdict::pass) return;
        const SentenceSet b = rules->support(d, a, x);
        if (!closure(b).contains(x)) {
          finitary.verdict = Verdict::fail;
          finitary.note = "replayed derivation support does not derive the sentence";
          finitary.witness = {named(u, "A", a), named(u, "B", b), named_sentence(u, "x", x)};
        }
      });
    }

    if (deduction.verdict == Verdict::pass) {
      for (const auto& imp : implications) {
        SentenceSet ax = a;
        ax.insert(imp.antecedent);
        if (closure(ax).contains(imp.consequent) && !ca.contains(imp.sentence)) {
          deduction.verdict = Verdict::fail;
          deduction.note = "Y ∈ Cn(A ∪ {X}) but (X ⇒ Y) ∉ Cn(A)";
          deduction.witness = {named(u, "A", a), named_sentence(u, "X", imp.antecedent),
                               named_sentence(u, "Y", imp.consequent),
                               named_sentence(u, "X=>Y", imp.sentence)};
          break;
        }
      }
    }
  }

  report.axioms.add(pass("axiom_i", "vacuously satisfied (finite universe)"));
  report.axioms.add(std::move(inclusion));
  report.axioms.add(std::move(monotone));
  report.axioms.add(std::move(idempotent));
  report.axioms.add(std::move(finitary));
  report.axioms.add(std::move(deduction));

  const SentenceSet c_empty = op.close(u.empty_set());
  const SentenceSet c_cog = op.close(u.cognitive());
  Check nonempty{"cn_empty_nonempty", Verdict::pass, "Cn(∅) ≠ ∅", {named(u, "Cn(∅)", c_empty)}};
  if (c_empty.empty()) {
    nonempty.verdict = Verdict::fail;
    nonempty.note = "cognitive condition violated: Cn(∅) = ∅";
  }
  Check open{"cn_cognitive_not_closed", Verdict::pass, "Cn(C) ≠ C", {named(u, "Cn(C)", c_cog)}};
  if (c_cog == u.cognitive()) {
    open.verdict = Verdict::fail;
    open.note = "cognitive condition violated: Cn(C) = C";
  }
  report.cognitive.add(std::move(nonempty));
  report.cognitive.add(std::move(open));
  return report;
}

}  // namespace ccspace
