#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "ccspace/check.hpp"
#include "ccspace/consequence.hpp"
#include "ccspace/sentence_set.hpp"

namespace ccspace {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Deductive subsets of a restriction domain, in lectic order.
struct MooreFamily {
  SentenceSet within;
  std::vector<SentenceSet> members;

  bool contains(const SentenceSet& s) const;
};

/// Every D ⊆ within with Cn(D) = D, emitted in lectic order by NextClosure
/// over the closure operator X -> Cn(X) if Cn(X) ⊆ within, else within.
/// Throws CapExceeded when |within| > cap.
MooreFamily enumerate_deductive(const ConsequenceOperator& op, const SentenceSet& within,
                                std::size_t cap = kDefaultEnumerationCap);

/// Intersection of all deductive supersets of `a` in Omega, found by testing
/// every superset. The free part Omega \ a must not exceed `cap` sentences.
SentenceSet cognitive_closure(const ConsequenceOperator& op, const SentenceSet& a,
                              std::size_t cap = kDefaultEnumerationCap);

/// The family τ = {A ⊆ C : Cn(C \ A) = C \ A}.
struct CctFamily {
  SentenceSet cognitive;
  std::vector<SentenceSet> members;
  std::vector<Diagnostic> diagnostics;

  bool contains(const SentenceSet& s) const;
  SentenceSet union_of_members() const;
};

CctFamily build_cct(const ConsequenceOperator& op, std::size_t cap = kDefaultEnumerationCap);

struct TheoremOptions {
  /// Sub-families are enumerated exhaustively up to this many members.
  std::size_t exhaustive_family_limit = 20;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Closure properties are checked over all pairs of subsets up to this |Omega|.
  std::size_t exhaustive_property_limit = 12;
  std::size_t cap = kDefaultEnumerationCap;
};

// Individual checks; check_structure_theorems runs all of them.
Check check_union_closure(const ConsequenceOperator& op, const CctFamily& tau,
                          const TheoremOptions& options = {});
Check check_conditional_intersection(const ConsequenceOperator& op, const CctFamily& tau,
                                     const TheoremOptions& options = {});
Check check_uncovered_sentence(const ConsequenceOperator& op, const CctFamily& tau);
Check check_covered_sentence(const ConsequenceOperator& op, const CctFamily& tau);
Check check_no_complementary_pair(const ConsequenceOperator& op, const CctFamily& tau,
                                  const TheoremOptions& options = {});
Check check_closure_equals_consequence(const ConsequenceOperator& op,
                                       const TheoremOptions& options = {});
/// Ids prop_i .. prop_v.
std::vector<Check> check_closure_properties(const ConsequenceOperator& op,
                                            const TheoremOptions& options = {});

/// Ids: t1, t2, t3, t4, t5, cl_equals_cn, cl_empty_nonempty,
/// cl_cognitive_not_closed, tau_member_closures, prop_i .. prop_v.
TheoremReport check_structure_theorems(const ConsequenceOperator& op, const CctFamily& tau,
                                       const TheoremOptions& options = {});

}  // namespace ccspace
