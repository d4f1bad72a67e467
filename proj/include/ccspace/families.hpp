#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ccspace/check.hpp"
#include "ccspace/consequence.hpp"
#include "ccspace/sentence_set.hpp"
#include "ccspace/universe.hpp"

namespace ccspace {

inline constexpr std::size_t kDefaultFamilyCap = 14;

/// Explicit family of subsets of a domain, deduplicated and in lectic order.
struct SetFamily {
  SentenceSet domain;
  std::vector<SentenceSet> members;

  /// Throws std::invalid_argument when a member leaves the domain.
  static SetFamily make(SentenceSet domain, std::vector<SentenceSet> members);

  bool contains(const SentenceSet& s) const;
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

enum class FamilyKind { classic_ideal, classic_filter, consequence_ideal, consequence_filter };

std::string_view to_string(FamilyKind k) noexcept;

/// Classic kinds report ids nonempty, downward|upward, union|intersection.
/// Consequence kinds report axiom_i, axiom_ii, axiom_iii and need `op`;
/// they range over the closures Cn(A) of the subsets A of the domain.
/// Throws std::invalid_argument if a consequence kind gets no operator and
/// CapExceeded if the domain is larger than `cap`.
CheckReport check_family_axioms(const Universe& universe, const SetFamily& family,
                                FamilyKind kind, const ConsequenceOperator* op = nullptr,
                                std::size_t cap = kDefaultFamilyCap);

/// Undirected adjacency over the sentences of a universe.
class ConnectionGraph {
 public:
  explicit ConnectionGraph(std::size_t width) : adjacency_(width) {}

  std::size_t size() const noexcept { return adjacency_.size(); }
  void connect(std::size_t a, std::size_t b);
  const std::vector<std::size_t>& neighbours(std::size_t a) const { return adjacency_.at(a); }

  /// Sentences reachable from `from` through nodes of `within`.
  SentenceSet reachable(std::size_t from, const SentenceSet& within) const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Every subset (including ∅) of the sentences reachable from f_star.
/// Throws std::invalid_argument if f_star ∉ within, CapExceeded past `cap`.
SetFamily build_connection_ideal(const ConnectionGraph& graph, std::size_t f_star,
                                 const SentenceSet& within, std::size_t cap = kDefaultFamilyCap);

/// Subsets of the reachable sentences that carry a truth label.
SetFamily build_truth_ideal(const ConnectionGraph& graph, std::size_t f_star,
                            const SentenceSet& within, const SentenceSet& truths,
                            std::size_t cap = kDefaultFamilyCap);

struct FamilyConstruction {
  SetFamily family;
  CheckReport classic;
  /// Present when the construction also claims the consequence axioms.
  std::optional<CheckReport> consequence;
};

/// {A ⊆ C_d : f ∈ A and some B ⊆ A has Cn(B) = B}, checked as a classic and
/// as a consequence filter on C_d. Throws std::invalid_argument when C_d is
/// not deductive or f ∉ C_d.
FamilyConstruction build_fd_filter(const ConsequenceOperator& op, const SentenceSet& c_d,
                                   std::size_t f, std::size_t cap = kDefaultFamilyCap);

/// {A ⊆ C : f ∈ Cn(A)} checked as a classic filter on C. Intersection
/// failures are reported as discrepancies; an empty family is reported as
/// not applicable.
FamilyConstruction build_fhat_filter(const ConsequenceOperator& op, std::size_t f,
                                     std::size_t cap = kDefaultFamilyCap);

}  // namespace ccspace
