#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ccspace/check.hpp"
#include "ccspace/closure_lattice.hpp"
#include "ccspace/sentence_set.hpp"
#include "ccspace/universe.hpp"

namespace ccspace {

inline constexpr std::size_t kMaxBaseObjects = 20;

enum class BaseTag { complete, irreducible };

std::string_view to_string(BaseTag t) noexcept;

struct BaseObject {
  std::string name;
  SentenceSet members;
  /// Carried through to reports only.
  BaseTag tag = BaseTag::complete;
};

struct Environment {
  LabelSpace points;
  std::vector<BaseObject> base;
  std::vector<SentenceSet> practical_wholes;
};

struct BaseObjectSpec {
  std::string name;
  std::vector<std::string> members;
  BaseTag tag = BaseTag::complete;
};

/// Throws std::invalid_argument on duplicate points or unknown labels.
Environment make_environment(std::vector<std::string> points, const std::vector<BaseObjectSpec>& base,
                             const std::vector<std::vector<std::string>>& practical_wholes);

struct PracticalTopology {
  LabelSpace points;
  /// ∅, E, then the proper opens in lectic order.
  std::vector<SentenceSet> opens;
  /// Ids: designated_clopen, topology_axioms.
  CheckReport checks;

  std::vector<SentenceSet> proper_opens() const;
};

/// Opens are ∅, E and every practical whole that is a union of base objects.
/// Throws WitnessedError for a practical whole that is not such a union and
/// CapExceeded beyond kMaxBaseObjects base objects.
PracticalTopology build_practical_topology(const Environment& env);

struct BaseClosure {
  SentenceSet closure;
  /// Several practical wholes of the minimal size contain the base object.
  bool ambiguous = false;
  /// Number of practical wholes containing the base object.
  std::size_t multiplicity = 0;
};

/// Smallest practical whole (by size, then lectic order) built from base
/// objects that contains base object `index`. Throws WitnessedError when no
/// practical whole contains it.
BaseClosure base_closure(const Environment& env, std::size_t index);

/// Map from the cognitive space C into the points of an environment.
struct CognitiveMap {
  /// Indexed by sentence; empty outside C.
  std::vector<std::optional<std::size_t>> target;

  SentenceSet preimage(const SentenceSet& points, std::size_t width) const;
};

/// Throws WitnessedError when the map misses part of C or maps a sentence
/// outside C, std::invalid_argument on unknown labels.
CognitiveMap make_cognitive_map(const Universe& universe, const Environment& env,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

/// Id: continuity. Every proper open must have its preimage in τ; all
/// failing opens are listed as witnesses in lectic order.
Check check_cognitive_continuity(const Universe& universe, const CognitiveMap& map,
                                 const PracticalTopology& topology, const CctFamily& tau);

struct WeakTopology {
  /// Distinct preimages of the opens, lectic order.
  std::vector<SentenceSet> family;
  /// Ids: clopen_complement, clopen_designation.
  CheckReport checks;
};

WeakTopology weak_topology_clopen(const Universe& universe, const CognitiveMap& map,
                                  const PracticalTopology& topology);

}  // namespace ccspace
