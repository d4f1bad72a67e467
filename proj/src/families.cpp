#include "ccspace/families.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ccspace/error.hpp"

namespace ccspace {

namespace {

constexpr std::size_t kHardDomainLimit = 30;

// Subsets of a domain as masks over the domain's own positions.
class DomainIndex {
 public:
  explicit DomainIndex(const SentenceSet& domain)
      : domain_(domain), positions_(domain.elements()) {}

  std::size_t width() const { return positions_.size(); }
  std::uint32_t full() const {
    return static_cast<std::uint32_t>((std::uint64_t{1} << width()) - 1);
  }

  SentenceSet expand(std::uint32_t rel) const {
    SentenceSet s(domain_.width());
    for (std::size_t j = 0; j < positions_.size(); ++j)
      if ((rel >> j) & 1U) s.insert(positions_[j]);
    return s;
  }

  std::optional<std::uint32_t> compress(const SentenceSet& s) const {
    if (!s.is_subset_of(domain_)) return std::nullopt;
    std::uint32_t rel = 0;
    for (std::size_t j = 0; j < positions_.size(); ++j)
      if (s.contains(positions_[j])) rel |= std::uint32_t{1} << j;
    return rel;
  }

 private:
  SentenceSet domain_;
  std::vector<std::size_t> positions_;
};

void require_domain(std::size_t width, std::size_t cap) {
  if (width > std::min(cap, kHardDomainLimit))
    throw CapExceeded("family domain has " + std::to_string(width) +
                      " sentences, above the cap of " + std::to_string(cap));
}

struct Indexed {
  std::vector<std::uint32_t> members;
  std::vector<char> in;
};

Indexed index_family(const DomainIndex& idx, const SetFamily& family) {
  Indexed out;
  out.in.assign(std::size_t{1} << idx.width(), 0);
  for (const auto& m : family.members) {
    auto rel = idx.compress(m);
    out.members.push_back(*rel);
    out.in[*rel] = 1;
  }
  return out;
}

Check nonempty_check(const SetFamily& family) {
  Check c{"nonempty", Verdict::pass, std::to_string(family.size()) + " member(s)", {}};
  if (family.empty()) {
    c.verdict = Verdict::fail;
    c.note = "family is empty";
  }
  return c;
}

CheckReport classic_axioms(const Universe& u, const DomainIndex& idx, const SetFamily& family,
                           bool ideal) {
  const Indexed f = index_family(idx, family);
  auto named = [&](const char* role, std::uint32_t rel) {
    return NamedSet{role, u.labels_of(idx.expand(rel))};
  };
  CheckReport report;
  report.add(nonempty_check(family));

  Check step{ideal ? "downward" : "upward", Verdict::pass,
             ideal ? "every subset of a member is a member" : "every superset within the domain of a member is a member",
             {}};
  for (auto m : f.members) {
    for (std::size_t j = 0; j < idx.width(); ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (ideal != static_cast<bool>(m & bit)) continue;
      const std::uint32_t next = m ^ bit;
      if (!f.in[next]) {
        step.verdict = Verdict::fail;
        step.witness = {named("A", m), named("B", next)};
        break;
      }
    }
    if (step.verdict != Verdict::pass) break;
  }
  report.add(std::move(step));

  Check pair{ideal ? "union" : "intersection", Verdict::pass,
             ideal ? "closed under pairwise unions" : "closed under pairwise intersections", {}};
  for (std::size_t i = 0; i < f.members.size() && pair.verdict == Verdict::pass; ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      const std::uint32_t a = f.members[i], b = f.members[j];
      const std::uint32_t r = ideal ? (a | b) : (a & b);
      if (!f.in[r]) {
        pair.verdict = Verdict::fail;
        pair.witness = {named("A", a), named("B", b), named(ideal ? "A∪B" : "A∩B", r)};
        break;
      }
    }
  report.add(std::move(pair));
  return report;
}

CheckReport consequence_axioms(const Universe& u, const DomainIndex& idx,
                               const SetFamily& family, const ConsequenceOperator& op,
                               bool ideal) {
  const Indexed f = index_family(idx, family);
  auto member = [&](const SentenceSet& s) {
    auto rel = idx.compress(s);
    return rel && f.in[*rel];
  };
  auto named = [&](const char* role, const SentenceSet& s) { return NamedSet{role, u.labels_of(s)}; };

  // Distinct closures Cn(A), A ⊆ domain, that stay inside the domain.
  std::vector<SentenceSet> inside;
  {
    std::unordered_set<SentenceSet> seen;
    for (std::uint64_t rel = 0; rel <= idx.full(); ++rel) {
      SentenceSet z = op.close(idx.expand(static_cast<std::uint32_t>(rel)));
      if (idx.compress(z) && seen.insert(z).second) inside.push_back(std::move(z));
    }
    std::sort(inside.begin(), inside.end());
  }
  std::vector<const SentenceSet*> in_family;
  for (const auto& z : inside)
    if (member(z)) in_family.push_back(&z);

  CheckReport report;
  const SentenceSet anchor = ideal ? op.close(u.empty_set()) : op.close(idx.expand(idx.full()));
  Check first{"axiom_i", Verdict::pass, ideal ? "Cn(∅) is a member" : "Cn(domain) is a member", {}};
  if (!member(anchor)) {
    first.verdict = Verdict::fail;
    first.note = ideal ? "Cn(∅) is not a member" : "Cn(domain) is not a member";
    first.witness = {named(ideal ? "Cn(∅)" : "Cn(domain)", anchor)};
  }
  report.add(std::move(first));

  Check second{"axiom_ii", Verdict::pass,
               ideal ? "Cn(B) ⊂ Cn(A) ∈ family ⇒ Cn(B) ∈ family (strict inclusion)"
                     : "Cn(A) ⊂ Cn(B), Cn(A) ∈ family ⇒ Cn(B) ∈ family (strict inclusion)",
               {}};
  for (const SentenceSet* za : in_family) {
    for (const auto& zb : inside) {
      const bool strict = ideal ? (zb != *za && zb.is_subset_of(*za))
                                : (zb != *za && za->is_subset_of(zb));
      if (strict && !member(zb)) {
        second.verdict = Verdict::fail;
        second.witness = {named("Cn(A)", *za), named("Cn(B)", zb)};
        break;
      }
    }
    if (second.verdict != Verdict::pass) break;
  }
  report.add(std::move(second));

  Check third{"axiom_iii", Verdict::pass,
              ideal ? "Cn(A) ∪ Cn(B) is a member" : "Cn(A) ∩ Cn(B) is a member", {}};
  for (std::size_t i = 0; i < in_family.size() && third.verdict == Verdict::pass; ++i)
    for (std::size_t j = i + 1; j < in_family.size(); ++j) {
      const SentenceSet r = ideal ? (*in_family[i] | *in_family[j]) : (*in_family[i] & *in_family[j]);
      if (!member(r)) {
        third.verdict = Verdict::fail;
        third.witness = {named("Cn(A)", *in_family[i]), named("Cn(B)", *in_family[j]),
                         named(ideal ? "union" : "intersection", r)};
        break;
      }
    }
  report.add(std::move(third));
  return report;
}

SetFamily power_set(const SentenceSet& domain, const SentenceSet& base, std::size_t cap) {
  const DomainIndex idx(base);
  require_domain(idx.width(), cap);
  std::vector<SentenceSet> members;
  members.reserve(std::size_t{1} << idx.width());
  for (std::uint64_t rel = 0; rel <= idx.full(); ++rel)
    members.push_back(idx.expand(static_cast<std::uint32_t>(rel)));
  return SetFamily::make(domain, std::move(members));
}

}  // namespace

SetFamily SetFamily::make(SentenceSet domain, std::vector<SentenceSet> members) {
  for (const auto& m : members)
    if (!m.is_subset_of(domain)) throw std::invalid_argument("family member outside its domain");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily{std::move(domain), std::move(members)};
}

bool SetFamily::contains(const SentenceSet& s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

std::string_view to_string(FamilyKind k) noexcept {
  switch (k) {
    case FamilyKind::classic_ideal: return "classic-ideal";
    case FamilyKind::classic_filter: return "classic-filter";
    case FamilyKind::consequence_ideal: return "consequence-ideal";
    case FamilyKind::consequence_filter: return "consequence-filter";
  }
  return "?";
}

CheckReport check_family_axioms(const Universe& universe, const SetFamily& family,
                                FamilyKind kind, const ConsequenceOperator* op, std::size_t cap) {
  const bool consequence =
      kind == FamilyKind::consequence_ideal || kind == FamilyKind::consequence_filter;
  if (consequence && op == nullptr)
    throw std::invalid_argument("consequence family axioms need a consequence operator");
  const DomainIndex idx(family.domain);
  require_domain(idx.width(), cap);
  for (const auto& m : family.members)
    if (!m.is_subset_of(family.domain))
      throw std::invalid_argument("family member outside its domain");

  switch (kind) {
    case FamilyKind::classic_ideal: return classic_axioms(universe, idx, family, true);
    case FamilyKind::classic_filter: return classic_axioms(universe, idx, family, false);
    case FamilyKind::consequence_ideal: return consequence_axioms(universe, idx, family, *op, true);
    case FamilyKind::consequence_filter:
      return consequence_axioms(universe, idx, family, *op, false);
  }
  return {};
}

void ConnectionGraph::connect(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::out_of_range("connect: unknown sentence");
  auto add = [&](std::size_t from, std::size_t to) {
    auto& n = adjacency_[from];
    if (std::find(n.begin(), n.end(), to) == n.end()) n.push_back(to);
  };
  add(a, b);
  add(b, a);
}

SentenceSet ConnectionGraph::reachable(std::size_t from, const SentenceSet& within) const {
  SentenceSet seen(size());
  if (!within.contains(from)) return seen;
  std::deque<std::size_t> queue{from};
  seen.insert(from);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto w : adjacency_[v])
      if (within.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
  }
  return seen;
}

SetFamily build_connection_ideal(const ConnectionGraph& graph, std::size_t f_star,
                                 const SentenceSet& within, std::size_t cap) {
  if (!within.contains(f_star)) throw std::invalid_argument("f* lies outside the domain");
  return power_set(within, graph.reachable(f_star, within), cap);
}

SetFamily build_truth_ideal(const ConnectionGraph& graph, std::size_t f_star,
                            const SentenceSet& within, const SentenceSet& truths,
                            std::size_t cap) {
  if (!within.contains(f_star)) throw std::invalid_argument("f* lies outside the domain");
  return power_set(within, graph.reachable(f_star, within) & truths, cap);
}

FamilyConstruction build_fd_filter(const ConsequenceOperator& op, const SentenceSet& c_d,
                                   std::size_t f, std::size_t cap) {
  if (!is_deductive(op, c_d)) throw std::invalid_argument("C_d is not deductive");
  if (!c_d.contains(f)) throw std::invalid_argument("f does not belong to C_d");
  const DomainIndex idx(c_d);
  require_domain(idx.width(), cap);
  const std::size_t n = std::size_t{1} << idx.width();

  // has[m]: some deductive B ⊆ m.
  std::vector<char> has(n, 0);
  for (std::size_t m = 0; m < n; ++m)
    has[m] = is_deductive(op, idx.expand(static_cast<std::uint32_t>(m))) ? 1 : 0;
  for (std::size_t j = 0; j < idx.width(); ++j)
    for (std::size_t m = 0; m < n; ++m)
      if ((m >> j) & 1U) has[m] |= has[m ^ (std::size_t{1} << j)];

  const std::uint32_t f_bit = *idx.compress([&] {
    SentenceSet s(c_d.width());
    s.insert(f);
    return s;
  }());
  std::vector<SentenceSet> members;
  for (std::size_t m = 0; m < n; ++m)
    if ((m & f_bit) && has[m]) members.push_back(idx.expand(static_cast<std::uint32_t>(m)));

  FamilyConstruction out{SetFamily::make(c_d, std::move(members)), {}, std::nullopt};
  out.classic = check_family_axioms(op.universe(), out.family, FamilyKind::classic_filter, &op, cap);
  out.consequence =
      check_family_axioms(op.universe(), out.family, FamilyKind::consequence_filter, &op, cap);
  return out;
}

FamilyConstruction build_fhat_filter(const ConsequenceOperator& op, std::size_t f,
                                     std::size_t cap) {
  const Universe& u = op.universe();
  if (f >= u.size()) throw std::out_of_range("f is not a sentence of the universe");
  const DomainIndex idx(u.cognitive());
  require_domain(idx.width(), cap);

  std::vector<SentenceSet> members;
  for (std::uint64_t rel = 0; rel <= idx.full(); ++rel) {
    SentenceSet a = idx.expand(static_cast<std::uint32_t>(rel));
    if (op.close(a).contains(f)) members.push_back(std::move(a));
  }
  FamilyConstruction out{SetFamily::make(u.cognitive(), std::move(members)), {}, std::nullopt};

  if (out.family.empty()) {
    for (const char* id : {"nonempty", "upward", "intersection"})
      out.classic.add({id, Verdict::not_applicable, "no filter (f underivable)", {}});
    return out;
  }
  out.classic = check_family_axioms(u, out.family, FamilyKind::classic_filter, &op, cap);
  for (auto& c : out.classic.checks)
    if (c.id == "intersection" && c.verdict == Verdict::fail) {
      c.verdict = Verdict::discrepancy;
      c.note = "f ∈ Cn(A) ∩ Cn(B) does not give f ∈ Cn(A ∩ B) here";
    }
  return out;
}

}  // namespace ccspace
