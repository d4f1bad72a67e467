#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccspace/check.hpp"
#include "ccspace/consequence.hpp"
#include "ccspace/measure.hpp"
#include "ccspace/sentence_set.hpp"
#include "ccspace/universe.hpp"

namespace ccspace {

inline constexpr Measure kDefaultEqualityTolerance = Measure::from_ticks(1000);  // 1e-9

/// Cognitive similarity distance over the sentences of a universe, either
/// |w(x) - w(y)| for a weight function or an explicit symmetric table.
///
/// Matrix metrics are validated once at construction; operations that rely
/// on the pseudometric axioms refuse metrics that failed (see trusted()).
class PseudoMetric {
 public:
  enum class Kind { weights, matrix };

  static PseudoMetric from_weights(std::vector<Measure> weights,
                                   Measure tolerance = kDefaultEqualityTolerance);
  static PseudoMetric from_matrix(std::vector<std::vector<Measure>> rows,
                                  Measure tolerance = kDefaultEqualityTolerance);

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  Measure tolerance() const noexcept { return tolerance_; }
  const std::vector<Measure>& weights() const noexcept { return weights_; }

  /// Throws std::out_of_range for unknown sentences.
  Measure cog(std::size_t x, std::size_t y) const;

  bool trusted() const noexcept { return trusted_; }

 private:
  PseudoMetric() = default;

  Kind kind_ = Kind::weights;
  std::size_t size_ = 0;
  Measure tolerance_ = kDefaultEqualityTolerance;
  std::vector<Measure> weights_;
  std::vector<Measure> table_;
  bool trusted_ = true;
};

struct MetricValidationOptions {
  /// Triples are scanned exhaustively up to this many sentences.
  std::size_t exhaustive_limit = 512;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

/// Ids: range, identity, symmetry, congruence, triangle.
CheckReport validate_pseudometric(const PseudoMetric& metric, const Universe& universe,
                                  const MetricValidationOptions& options = {});

/// {y : cog(x, y) < eps}. Throws std::invalid_argument unless 0 < eps < 1.
SentenceSet ball(const PseudoMetric& metric, std::size_t x, Measure eps);

/// Finite prefix of a thought sequence; positions index the universe.
struct ThoughtSequence {
  std::string name;
  std::vector<std::size_t> items;
  std::optional<std::size_t> virtual_limit;
  /// The last item is declared to repeat forever.
  bool constant_tail = false;

  SentenceSet support(std::size_t width) const;
};

struct LimitCandidate {
  std::size_t sentence = 0;
  bool detected = false;
  /// 1-based onset m: every item at index >= m lies in the ball.
  std::optional<std::size_t> onset;
  std::size_t ball_hits = 0;
};

struct LimitReport {
  Measure epsilon;
  std::size_t limit_point_min = 0;
  std::vector<LimitCandidate> candidates;
  /// The set D of detected limits.
  SentenceSet limits;
  /// (sentence, ball hits) for candidates reaching limit_point_min.
  std::vector<std::pair<std::size_t, std::size_t>> limit_points;
};

/// Scans every sentence as a limit candidate. A candidate is detected when
/// the stable tail has at least two items (one for a single-item sequence),
/// so the final item alone never counts. When `limit_point_min` is
/// absent it defaults to a strict majority of the tail that starts at the
/// earliest detected onset (the whole sequence when nothing is detected).
LimitReport detect_limits(const PseudoMetric& metric, const ThoughtSequence& seq, Measure eps,
                          std::optional<std::size_t> limit_point_min = std::nullopt);

struct PartnerSequence {
  const ThoughtSequence* sequence = nullptr;
  const LimitReport* report = nullptr;
};

/// Ids: limits_within_2eps, limits_coincide_exact, t8, limit_closure,
/// limits_in_deductive_supersets, tail_coincidence.
TheoremReport check_limit_theorems(const ConsequenceOperator& op, const PseudoMetric& metric,
                                   const ThoughtSequence& seq, const LimitReport& report,
                                   std::span<const PartnerSequence> partners = {},
                                   std::size_t cap = 24);

/// Smallest 1-based k such that ball(x, eps) ⊆ region and no item at index
/// >= k enters the ball; k must not exceed the sequence length.
std::optional<std::size_t> detect_black_hole(const PseudoMetric& metric,
                                             const ThoughtSequence& seq, std::size_t x,
                                             Measure eps, const SentenceSet& region);

struct BlackHole {
  std::string sequence;
  std::size_t x = 0;
  Measure epsilon;
  SentenceSet region;
  std::size_t onset = 0;
};

struct CompactnessReport {
  bool compact = true;
  /// Every black hole found, in (sequence, x, epsilon) scan order.
  std::vector<BlackHole> black_holes;
  /// Id: no_limit_at_black_hole.
  CheckReport checks;
  std::vector<Diagnostic> warnings;
};

/// Searches every registered sequence and every threshold of the grid for a
/// black hole with region = solution space. The centre is the sequence's
/// virtual limit when it declares one, else every x in the solution space.
CompactnessReport check_compactness(const PseudoMetric& metric, const Universe& universe,
                                    const SentenceSet& solution_space,
                                    std::span<const ThoughtSequence> sequences,
                                    std::span<const Measure> eps_grid);

}  // namespace ccspace
