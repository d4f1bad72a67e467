#include "ccspace/closure_lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "ccspace/error.hpp"

namespace ccspace {

namespace {

bool sorted_contains(const std::vector<SentenceSet>& members, const SentenceSet& s) {
  return std::binary_search(members.begin(), members.end(), s);
}

NamedSet named(const Universe& u, std::string role, const SentenceSet& s) {
  return {std::move(role), u.labels_of(s)};
}

void require_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(size) +
                      " sentences exceed the enumeration cap of " + std::to_string(cap));
}

/// Walks sub-families of τ with at least two members. Exhaustive up to the
/// configured limit, otherwise every pair plus random draws. The visitor
/// receives member indices, their union and their intersection, and returns
/// false to stop.
using SubfamilyVisitor = std::function<bool(const std::vector<std::size_t>&,
                                            const SentenceSet&, const SentenceSet&)>;

struct WalkStats {
  std::size_t visited = 0;
  bool exhaustive = false;
};

WalkStats walk_subfamilies(const std::vector<SentenceSet>& members, const TheoremOptions& options,
                           const SentenceSet& top, const SubfamilyVisitor& visit) {
  WalkStats stats;
  const std::size_t m = members.size();
  if (m < 2) {
    stats.exhaustive = true;
    return stats;
  }
  std::vector<std::size_t> chosen;
  bool stop = false;

  if (m <= options.exhaustive_family_limit) {
    stats.exhaustive = true;
    std::function<void(std::size_t, const SentenceSet&, const SentenceSet&)> rec =
        [&](std::size_t start, const SentenceSet& uni, const SentenceSet& inter) {
          for (std::size_t i = start; i < m && !stop; ++i) {
            chosen.push_back(i);
            SentenceSet u2 = chosen.size() == 1 ? members[i] : uni | members[i];
            SentenceSet i2 = chosen.size() == 1 ? members[i] : inter & members[i];
            if (chosen.size() >= 2) {
              ++stats.visited;
              if (!visit(chosen, u2, i2)) stop = true;
            }
            if (!stop) rec(i + 1, u2, i2);
            chosen.pop_back();
          }
        };
    rec(0, top, top);
    return stats;
  }

  for (std::size_t i = 0; i < m && !stop; ++i)
    for (std::size_t j = i + 1; j < m && !stop; ++j) {
      chosen = {i, j};
      ++stats.visited;
      if (!visit(chosen, members[i] | members[j], members[i] & members[j])) stop = true;
    }
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t s = 0; s < options.samples && !stop; ++s) {
    std::uniform_int_distribution<std::size_t> size_dist(2, m);
    const std::size_t k = size_dist(rng);
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, m - 1);
      std::swap(order[i], order[pick(rng)]);
    }
    chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(chosen.begin(), chosen.end());
    SentenceSet uni = members[chosen[0]];
    SentenceSet inter = members[chosen[0]];
    for (std::size_t i = 1; i < k; ++i) {
      uni |= members[chosen[i]];
      inter &= members[chosen[i]];
    }
    ++stats.visited;
    if (!visit(chosen, uni, inter)) stop = true;
  }
  return stats;
}

std::string scope_note(const WalkStats& stats) {
  return std::to_string(stats.visited) + (stats.exhaustive ? " sub-families (exhaustive)"
                                                            : " sub-families (pairs + sampled)");
}

}  // namespace

bool MooreFamily::contains(const SentenceSet& s) const {
  return sorted_contains(members, s);
}

MooreFamily enumerate_deductive(const ConsequenceOperator& op, const SentenceSet& within,
                                std::size_t cap) {
  require_cap(within.count(), cap, "enumerate_deductive");
  MooreFamily family{within, {}};
  const std::vector<std::size_t> positions = within.elements();

  auto restricted_close = [&](const SentenceSet& x) {
    SentenceSet c = op.close(x);
    return c.is_subset_of(within) ? c : within;
  };
  // The restricted operator's top element `within` is closed for it but is
  // deductive only if Cn(within) = within.
  const bool within_deductive = is_deductive(op, within);
  auto emit = [&](const SentenceSet& s) {
    if (s != within || within_deductive) family.members.push_back(s);
  };

  SentenceSet current = restricted_close(SentenceSet(within.width()));
  emit(current);
  while (current != within) {
    bool advanced = false;
    for (std::size_t p : positions) {
      if (current.contains(p)) {
        current.erase(p);
        continue;
      }
      SentenceSet candidate = current;
      candidate.insert(p);
      candidate = restricted_close(candidate);
      // Accept when nothing more significant than p was added.
      if ((candidate - current).last() == p) {
        current = std::move(candidate);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    emit(current);
  }
  return family;
}

SentenceSet cognitive_closure(const ConsequenceOperator& op, const SentenceSet& a,
                              std::size_t cap) {
  const Universe& u = op.universe();
  const SentenceSet free_part = u.full_set() - a;
  const std::vector<std::size_t> free = free_part.elements();
  require_cap(free.size(), std::min<std::size_t>(cap, 62), "cognitive_closure");

  SentenceSet result = u.full_set();
  const std::uint64_t combos = std::uint64_t{1} << free.size();
  for (std::uint64_t bits = 0; bits < combos; ++bits) {
    SentenceSet candidate = a;
    for (std::size_t j = 0; j < free.size(); ++j)
      if ((bits >> j) & 1U) candidate.insert(free[j]);
    if (result.is_subset_of(candidate)) continue;  // cannot shrink the intersection
    if (is_deductive(op, candidate)) {
      result &= candidate;
      if (result == a) break;
    }
  }
  return result;
}

bool CctFamily::contains(const SentenceSet& s) const { return sorted_contains(members, s); }

SentenceSet CctFamily::union_of_members() const {
  SentenceSet out(cognitive.width());
  for (const auto& m : members) out |= m;
  return out;
}

CctFamily build_cct(const ConsequenceOperator& op, std::size_t cap) {
  const Universe& u = op.universe();
  CctFamily tau{u.cognitive(), {}, {}};
  const MooreFamily closed = enumerate_deductive(op, u.cognitive(), cap);
  tau.members.reserve(closed.members.size());
  for (const auto& d : closed.members) tau.members.push_back(complement_in(d, u.cognitive()));
  std::sort(tau.members.begin(), tau.members.end());

  const SentenceSet c_empty = op.close(u.empty_set());
  if (!c_empty.is_subset_of(u.cognitive()))
    tau.diagnostics.push_back({"logic_base_outside_cognitive",
                               "Cn(∅) is not contained in C; no subset of C is deductive and τ is empty"});
  if (c_empty.empty() || is_deductive(op, u.cognitive()))
    tau.diagnostics.push_back({"cognitive_conditions_violated",
                               "cognitive conditions violated (Cn(∅) = ∅ or Cn(C) = C); "
                               "∅ or C may belong to τ"});
  return tau;
}

Check check_union_closure(const ConsequenceOperator& op, const CctFamily& tau,
                          const TheoremOptions& options) {
  const Universe& u = op.universe();
  Check c{"t1", Verdict::pass, {}, {}};
  if (tau.members.empty()) {
    c.verdict = Verdict::not_applicable;
    c.note = "τ is empty";
    return c;
  }
  const std::unordered_set<SentenceSet> lookup(tau.members.begin(), tau.members.end());
  const WalkStats stats = walk_subfamilies(
      tau.members, options, tau.cognitive,
      [&](const std::vector<std::size_t>& chosen, const SentenceSet& uni, const SentenceSet&) {
        if (lookup.count(uni)) return true;
        c.verdict = Verdict::fail;
        for (auto i : chosen) c.witness.push_back(named(u, "member", tau.members[i]));
        c.witness.push_back(named(u, "union", uni));
        return false;
      });
  c.note = c.verdict == Verdict::pass ? "every union of CWO sets is CWO; " + scope_note(stats)
                                      : "union of CWO sets is not CWO";
  return c;
}

Check check_conditional_intersection(const ConsequenceOperator& op, const CctFamily& tau,
                                     const TheoremOptions& options) {
  const Universe& u = op.universe();
  Check c{"t2", Verdict::pass, {}, {}};
  if (tau.members.size() < 2) {
    c.verdict = Verdict::not_applicable;
    c.note = "τ has fewer than two members";
    return c;
  }
  const std::unordered_set<SentenceSet> lookup(tau.members.begin(), tau.members.end());
  std::unordered_map<SentenceSet, bool> deductive_cache;
  std::size_t premise_true = 0;
  const WalkStats stats = walk_subfamilies(
      tau.members, options, tau.cognitive,
      [&](const std::vector<std::size_t>& chosen, const SentenceSet&, const SentenceSet& inter) {
        // ∪ (C \ A_i) = C \ ∩ A_i
        const SentenceSet complements = tau.cognitive - inter;
        auto it = deductive_cache.find(complements);
        if (it == deductive_cache.end())
          it = deductive_cache.emplace(complements, is_deductive(op, complements)).first;
        if (!it->second) return true;
        ++premise_true;
        if (lookup.count(inter)) return true;
        c.verdict = Verdict::fail;
        for (auto i : chosen) c.witness.push_back(named(u, "member", tau.members[i]));
        c.witness.push_back(named(u, "intersection", inter));
        return false;
      });
  if (c.verdict == Verdict::pass)
    c.note = scope_note(stats) + ", " + std::to_string(premise_true) +
             " with deductive union of complements, 0 violations; the remaining instances "
             "have a false premise and are vacuously consistent";
  else
    c.note = "union of complements is deductive but the intersection is not CWO";
  return c;
}

Check check_uncovered_sentence(const ConsequenceOperator& op, const CctFamily& tau) {
  const Universe& u = op.universe();
  Check c{"t3", Verdict::pass, {}, {}};
  if (tau.cognitive.empty()) {
    c.verdict = Verdict::not_applicable;
    c.note = "not applicable: C is empty";
    return c;
  }
  if (op.close(u.empty_set()).empty()) {
    c.verdict = Verdict::not_applicable;
    c.note = "not applicable: Cn(∅)=∅";
    return c;
  }
  const SentenceSet uncovered = tau.cognitive - tau.union_of_members();
  if (auto f = uncovered.first()) {
    c.note = "C \\ ∪τ is non-empty";
    c.witness = {{"element", {u.label(*f)}}, named(u, "uncovered", uncovered)};
  } else {
    c.verdict = Verdict::fail;
    c.note = "every sentence of C lies in some CWO set";
  }
  return c;
}

Check check_covered_sentence(const ConsequenceOperator& op, const CctFamily& tau) {
  const Universe& u = op.universe();
  Check c{"t4", Verdict::pass, {}, {}};
  const SentenceSet covered = tau.union_of_members();
  if (auto f = covered.first()) {
    c.note = "∪τ is non-empty";
    c.witness = {{"element", {u.label(*f)}}};
  } else {
    c.verdict = Verdict::fail;
    c.note = "fails: no proper deductive subset of C";
  }
  return c;
}

Check check_no_complementary_pair(const ConsequenceOperator& op, const CctFamily& tau,
                                  const TheoremOptions& options) {
  const Universe& u = op.universe();
  Check c{"t5", Verdict::pass, {}, {}};
  const MooreFamily closed = enumerate_deductive(op, tau.cognitive, options.cap);
  const SentenceSet* offending = nullptr;
  for (const auto& d : closed.members)
    if (closed.contains(tau.cognitive - d)) {
      offending = &d;
      break;
    }
  const bool applicable = !op.close(u.empty_set()).empty();
  if (!offending) {
    c.verdict = applicable ? Verdict::pass : Verdict::not_applicable;
    c.note = applicable ? "no A ⊆ C has both A and C \\ A deductive (scanned " +
                              std::to_string(std::size_t{1} << tau.cognitive.count()) +
                              " subsets of C via the deductive family)"
                        : "not applicable: Cn(∅)=∅; no complementary deductive pair found";
    return c;
  }
  c.witness = {named(u, "A", *offending), named(u, "C\\A", tau.cognitive - *offending)};
  if (applicable) {
    c.verdict = Verdict::fail;
    c.note = "A and C \\ A are both deductive, so A ∈ τ";
  } else {
    c.verdict = Verdict::not_applicable;
    c.note = "not applicable: Cn(∅)=∅ lets A and C \\ A both be deductive";
  }
  return c;
}

Check check_closure_equals_consequence(const ConsequenceOperator& op,
                                       const TheoremOptions& options) {
  const Universe& u = op.universe();
  const std::size_t n = u.size();
  Check c{"cl_equals_cn", Verdict::pass, {}, {}};
  auto compare = [&](const SentenceSet& a) {
    const SentenceSet cl = cognitive_closure(op, a, options.cap);
    const SentenceSet cn = op.close(a);
    if (cl == cn) return true;
    c.verdict = Verdict::fail;
    c.note = "Cl□(A) differs from Cn(A)";
    c.witness = {named(u, "A", a), named(u, "Cl(A)", cl), named(u, "Cn(A)", cn)};
    return false;
  };
  if (n <= options.exhaustive_property_limit) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (!compare(SentenceSet::from_mask(n, m))) return c;
    c.note = "Cl□(A) = Cn(A) for all " + std::to_string(std::size_t{1} << n) + " subsets";
    return c;
  }
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  const std::size_t max_free = std::min<std::size_t>(options.cap, 16);
  for (std::size_t s = 0; s < options.samples; ++s) {
    SentenceSet a(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) a.insert(i);
    std::vector<std::size_t> free = (u.full_set() - a).elements();
    std::shuffle(free.begin(), free.end(), rng);
    for (std::size_t i = 0; i + max_free < free.size(); ++i) a.insert(free[i]);
    if (!compare(a)) return c;
  }
  c.note = "Cl□(A) = Cn(A) on " + std::to_string(options.samples) + " sampled subsets";
  return c;
}

std::vector<Check> check_closure_properties(const ConsequenceOperator& op,
                                            const TheoremOptions& options) {
  const Universe& u = op.universe();
  const std::size_t n = u.size();
  std::vector<Check> out;
  const char* ids[] = {"prop_i", "prop_ii", "prop_iii", "prop_iv", "prop_v"};
  const char* claims[] = {
      "A ⊆ B ⇒ Cl□(A) ⊆ Cl□(B)",
      "Cl□(A) ∪ Cl□(B) ⊆ Cl□(A ∪ B)",
      "Cl□(A ∪ B) = Cl□(A) ∪ Cl□(B) when A, B, A ∪ B are deductive",
      "Cl□(A ∩ B) ⊆ Cl□(A) ∩ Cl□(B)",
      "Cl□(A ∩ B) = Cl□(A) ∩ Cl□(B) when A, B, A ∩ B are deductive",
  };
  for (std::size_t k = 0; k < 5; ++k) out.push_back({ids[k], Verdict::pass, claims[k], {}});

  auto record = [&](std::size_t k, const SentenceSet& a, const SentenceSet& b) {
    if (out[k].verdict != Verdict::pass) return;
    out[k].verdict = Verdict::fail;
    out[k].witness = {named(u, "A", a), named(u, "B", b)};
  };

  if (n <= options.exhaustive_property_limit) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<std::uint64_t> cl(size);
    std::vector<char> deductive(size);
    for (std::uint64_t m = 0; m < size; ++m) {
      const SentenceSet a = SentenceSet::from_mask(n, m);
      cl[m] = cognitive_closure(op, a, options.cap).to_mask();
      deductive[m] = is_deductive(op, a);
    }
    auto subset = [](std::uint64_t x, std::uint64_t y) { return (x & ~y) == 0; };
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b) {
        const std::uint64_t uni = a | b;
        const std::uint64_t inter = a & b;
        bool bad[5] = {
            subset(a, b) && !subset(cl[a], cl[b]),
            !subset(cl[a] | cl[b], cl[uni]),
            deductive[a] && deductive[b] && deductive[uni] && cl[uni] != (cl[a] | cl[b]),
            !subset(cl[inter], cl[a] & cl[b]),
            deductive[a] && deductive[b] && deductive[inter] && cl[inter] != (cl[a] & cl[b]),
        };
        for (std::size_t k = 0; k < 5; ++k)
          if (bad[k]) record(k, SentenceSet::from_mask(n, a), SentenceSet::from_mask(n, b));
      }
    for (auto& c : out)
      if (c.verdict == Verdict::pass)
        c.note += "; all " + std::to_string(size * size) + " pairs of subsets of Ω";
    return out;
  }

  // Beyond the exhaustive limit Cl□ is read through Cn, which cl_equals_cn covers.
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(0.5);
  auto random_set = [&] {
    SentenceSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coin(rng)) s.insert(i);
    return s;
  };
  for (std::size_t s = 0; s < options.samples; ++s) {
    SentenceSet a = random_set();
    SentenceSet b = s % 2 == 0 ? random_set() : a | random_set();
    const SentenceSet ca = op.close(a), cb = op.close(b);
    const SentenceSet cu = op.close(a | b), ci = op.close(a & b);
    if (a.is_subset_of(b) && !ca.is_subset_of(cb)) record(0, a, b);
    if (!(ca | cb).is_subset_of(cu)) record(1, a, b);
    if (ca == a && cb == b && cu == (a | b) && cu != (ca | cb)) record(2, a, b);
    if (!ci.is_subset_of(ca & cb)) record(3, a, b);
    if (ca == a && cb == b && ci == (a & b) && ci != (ca & cb)) record(4, a, b);
  }
  for (auto& c : out)
    if (c.verdict == Verdict::pass)
      c.note += "; " + std::to_string(options.samples) + " sampled pairs, Cl□ read as Cn";
  return out;
}

TheoremReport check_structure_theorems(const ConsequenceOperator& op, const CctFamily& tau,
                                       const TheoremOptions& options) {
  const Universe& u = op.universe();
  TheoremReport report;
  report.add(check_union_closure(op, tau, options));
  report.add(check_conditional_intersection(op, tau, options));
  report.add(check_uncovered_sentence(op, tau));
  report.add(check_covered_sentence(op, tau));
  report.add(check_no_complementary_pair(op, tau, options));
  report.add(check_closure_equals_consequence(op, options));

  const SentenceSet c_empty = op.close(u.empty_set());
  const SentenceSet c_cog = op.close(u.cognitive());
  const bool small_enough = u.size() <= std::min<std::size_t>(options.cap, 62);

  Check cl_empty{"cl_empty_nonempty", Verdict::pass, "Cl□(∅) ≠ ∅", {}};
  if (c_empty.empty()) {
    cl_empty.verdict = Verdict::not_applicable;
    cl_empty.note = "not applicable: Cn(∅)=∅";
  } else if (!small_enough) {
    cl_empty.verdict = Verdict::not_evaluated;
    cl_empty.note = "universe exceeds the enumeration cap";
  } else {
    const SentenceSet cl = cognitive_closure(op, u.empty_set(), options.cap);
    cl_empty.witness = {named(u, "Cl(∅)", cl)};
    if (cl.empty()) cl_empty.verdict = Verdict::fail;
  }
  report.add(std::move(cl_empty));

  Check cl_cog{"cl_cognitive_not_closed", Verdict::pass, "Cl□(C) ≠ C", {}};
  if (c_cog == u.cognitive()) {
    cl_cog.verdict = Verdict::not_applicable;
    cl_cog.note = "not applicable: Cn(C)=C";
  } else if (u.size() - u.cognitive().count() > std::min<std::size_t>(options.cap, 62)) {
    cl_cog.verdict = Verdict::not_evaluated;
    cl_cog.note = "free part of Ω exceeds the enumeration cap";
  } else {
    const SentenceSet cl = cognitive_closure(op, u.cognitive(), options.cap);
    cl_cog.witness = {named(u, "Cl(C)", cl)};
    if (cl == u.cognitive()) cl_cog.verdict = Verdict::fail;
  }
  report.add(std::move(cl_cog));

  Check members{"tau_member_closures", Verdict::pass,
                "for A ∈ τ: Cl□(A) ≠ A and Cl□(C \\ A) = C \\ A (Cl□ read as Cn)", {}};
  if (c_empty.empty()) {
    members.verdict = Verdict::not_applicable;
    members.note = "not applicable: Cn(∅)=∅";
  } else {
    for (const auto& a : tau.members) {
      const SentenceSet rest = tau.cognitive - a;
      if (op.close(a) == a || op.close(rest) != rest) {
        members.verdict = Verdict::fail;
        members.witness = {named(u, "A", a)};
        break;
      }
    }
  }
  report.add(std::move(members));

  for (auto& c : check_closure_properties(op, options)) report.add(std::move(c));
  return report;
}

}  // namespace ccspace
