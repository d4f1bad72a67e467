#include "ccspace/cognition_metric.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace ccspace {

namespace {

using Labeler = std::function<std::string(std::size_t)>;

void require_trusted(const PseudoMetric& metric) {
  if (!metric.trusted())
    throw std::invalid_argument("matrix metric failed pseudometric validation");
}

void require_threshold(Measure eps) {
  if (!eps.in_open_unit())
    throw std::invalid_argument("cognitive threshold must lie strictly between 0 and 1");
}

std::string fmt(Measure m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", m.to_double());
  return buf;
}

CheckReport scan_axioms(const PseudoMetric& metric, const MetricValidationOptions& options,
                        const Labeler& label) {
  const std::size_t n = metric.size();
  const bool structural = metric.kind() == PseudoMetric::Kind::weights;
  const bool exhaustive = n <= options.exhaustive_limit;
  const std::string scope =
      (exhaustive ? std::string("exhaustive over ") + std::to_string(n) + "^3 triples"
                  : std::to_string(options.samples) + " sampled triples") +
      (structural ? "; weight metric, structural self-test" : "");

  Check range{"range", Verdict::pass, "all distances in [0,1]; " + scope, {}};
  Check identity{"identity", Verdict::pass, "cog(x,x) = 0", {}};
  Check symmetry{"symmetry", Verdict::pass, "cog(x,y) = cog(y,x)", {}};
  Check congruence{"congruence", Verdict::pass,
                   "cog(x,y) = 0 ⇒ |cog(x,z) - cog(y,z)| <= " + fmt(metric.tolerance()), {}};
  Check triangle{"triangle", Verdict::pass, "cog(x,z) <= cog(x,y) + cog(y,z)", {}};

  auto point = [&](const char* role, std::size_t i) { return NamedSet{role, {label(i)}}; };

  if (structural) {
    for (std::size_t x = 0; x < n && range.verdict == Verdict::pass; ++x)
      if (!metric.weights()[x].in_closed_unit()) {
        range.verdict = Verdict::fail;
        range.witness = {point("x", x)};
      }
  }

  auto visit_pair = [&](std::size_t x, std::size_t y) {
    const Measure d = metric.cog(x, y);
    if (range.verdict == Verdict::pass && !d.in_closed_unit()) {
      range.verdict = Verdict::fail;
      range.witness = {point("x", x), point("y", y)};
    }
    if (identity.verdict == Verdict::pass && x == y && d != Measure::zero()) {
      identity.verdict = Verdict::fail;
      identity.witness = {point("x", x)};
    }
    if (symmetry.verdict == Verdict::pass && d != metric.cog(y, x)) {
      symmetry.verdict = Verdict::fail;
      symmetry.witness = {point("x", x), point("y", y)};
    }
  };
  auto visit_triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    const Measure xy = metric.cog(x, y);
    if (triangle.verdict == Verdict::pass && metric.cog(x, z) > xy + metric.cog(y, z)) {
      triangle.verdict = Verdict::fail;
      triangle.witness = {point("x", x), point("y", y), point("z", z)};
    }
    if (congruence.verdict == Verdict::pass && xy == Measure::zero() &&
        abs_diff(metric.cog(x, z), metric.cog(y, z)) > metric.tolerance()) {
      congruence.verdict = Verdict::fail;
      congruence.witness = {point("x", x), point("y", y), point("z", z)};
    }
  };

  if (exhaustive) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        visit_pair(x, y);
        for (std::size_t z = 0; z < n; ++z) visit_triple(x, y, z);
      }
  } else if (n > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < options.samples; ++s) {
      const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      visit_pair(x, y);
      visit_pair(x, x);
      visit_triple(x, y, z);
    }
  }

  CheckReport report;
  for (auto* c : {&range, &identity, &symmetry, &congruence, &triangle}) report.add(std::move(*c));
  return report;
}

}  // namespace

PseudoMetric PseudoMetric::from_weights(std::vector<Measure> weights, Measure tolerance) {
  PseudoMetric m;
  m.kind_ = Kind::weights;
  m.size_ = weights.size();
  m.weights_ = std::move(weights);
  m.tolerance_ = tolerance;
  for (auto w : m.weights_)
    if (!w.in_closed_unit()) throw std::invalid_argument("weights must lie in [0,1]");
  return m;
}

PseudoMetric PseudoMetric::from_matrix(std::vector<std::vector<Measure>> rows, Measure tolerance) {
  PseudoMetric m;
  m.kind_ = Kind::matrix;
  m.size_ = rows.size();
  m.tolerance_ = tolerance;
  m.table_.reserve(m.size_ * m.size_);
  for (const auto& row : rows) {
    if (row.size() != m.size_) throw std::invalid_argument("similarity matrix must be square");
    m.table_.insert(m.table_.end(), row.begin(), row.end());
  }
  m.trusted_ = scan_axioms(m, {}, [](std::size_t i) { return std::to_string(i); }).clean();
  return m;
}

Measure PseudoMetric::cog(std::size_t x, std::size_t y) const {
  if (x >= size_ || y >= size_) throw std::out_of_range("cog: unknown sentence");
  if (kind_ == Kind::weights) return abs_diff(weights_[x], weights_[y]);
  return table_[x * size_ + y];
}

CheckReport validate_pseudometric(const PseudoMetric& metric, const Universe& universe,
                                  const MetricValidationOptions& options) {
  if (metric.size() != universe.size())
    throw std::invalid_argument("metric size does not match the universe");
  return scan_axioms(metric, options, [&](std::size_t i) { return universe.label(i); });
}

SentenceSet ball(const PseudoMetric& metric, std::size_t x, Measure eps) {
  require_threshold(eps);
  require_trusted(metric);
  SentenceSet out(metric.size());
  for (std::size_t y = 0; y < metric.size(); ++y)
    if (metric.cog(x, y) < eps) out.insert(y);
  return out;
}

SentenceSet ThoughtSequence::support(std::size_t width) const {
  SentenceSet s(width);
  for (auto i : items) s.insert(i);
  return s;
}

LimitReport detect_limits(const PseudoMetric& metric, const ThoughtSequence& seq, Measure eps,
                          std::optional<std::size_t> limit_point_min) {
  require_threshold(eps);
  require_trusted(metric);
  if (seq.items.empty()) throw std::invalid_argument("detect_limits: empty sequence");
  const std::size_t n = metric.size();
  const std::size_t len = seq.items.size();

  LimitReport report;
  report.epsilon = eps;
  report.limits = SentenceSet(n);
  report.candidates.reserve(n);
  std::optional<std::size_t> best_onset;
  for (std::size_t x = 0; x < n; ++x) {
    LimitCandidate c;
    c.sentence = x;
    std::size_t last_outside = 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (metric.cog(x, seq.items[i]) < eps)
        ++c.ball_hits;
      else
        last_outside = i + 1;
    }
    if (last_outside < len && (len - last_outside >= 2 || len == 1)) {
      c.detected = true;
      c.onset = last_outside + 1;
      report.limits.insert(x);
      best_onset = std::min(best_onset.value_or(len), *c.onset);
    }
    report.candidates.push_back(c);
  }

  const std::size_t tail = best_onset ? len - *best_onset + 1 : len;
  report.limit_point_min = limit_point_min.value_or(tail / 2 + 1);
  for (const auto& c : report.candidates)
    if (c.ball_hits >= report.limit_point_min)
      report.limit_points.emplace_back(c.sentence, c.ball_hits);
  return report;
}

TheoremReport check_limit_theorems(const ConsequenceOperator& op, const PseudoMetric& metric,
                                   const ThoughtSequence& seq, const LimitReport& report,
                                   std::span<const PartnerSequence> partners, std::size_t cap) {
  require_trusted(metric);
  const Universe& u = op.universe();
  const Measure eps = report.epsilon;
  const std::vector<std::size_t> limits = report.limits.elements();
  auto one = [&](const char* role, std::size_t x) { return NamedSet{role, {u.label(x)}}; };
  auto named = [&](const char* role, const SentenceSet& s) { return NamedSet{role, u.labels_of(s)}; };
  TheoremReport out;

  Check bound{"limits_within_2eps", Verdict::pass,
              "detected limits pairwise closer than 2ε = " + fmt(eps + eps), {}};
  for (std::size_t i = 0; i < limits.size() && bound.verdict == Verdict::pass; ++i)
    for (std::size_t j = i + 1; j < limits.size(); ++j)
      if (!(metric.cog(limits[i], limits[j]) < eps + eps)) {
        bound.verdict = Verdict::fail;
        bound.witness = {one("x'", limits[i]), one("x''", limits[j])};
        break;
      }
  if (limits.size() < 2 && bound.verdict == Verdict::pass)
    bound.note += "; fewer than two limits detected";
  out.add(std::move(bound));

  Check exact{"limits_coincide_exact", Verdict::not_applicable,
              "no declared constant tail; only the 2ε bound holds on a finite prefix", {}};
  if (seq.constant_tail) {
    const std::size_t y = seq.items.back();
    std::vector<std::size_t> eventual;
    for (std::size_t x = 0; x < metric.size(); ++x)
      if (metric.cog(x, y) <= metric.tolerance()) eventual.push_back(x);
    exact.verdict = Verdict::pass;
    exact.note = "limits for every ε of the constant tail " + u.label(y) +
                 " pairwise cognitively coincide";
    for (std::size_t i = 0; i < eventual.size() && exact.verdict == Verdict::pass; ++i)
      for (std::size_t j = i + 1; j < eventual.size(); ++j)
        if (metric.cog(eventual[i], eventual[j]) > metric.tolerance()) {
          exact.verdict = Verdict::fail;
          exact.witness = {one("x'", eventual[i]), one("x''", eventual[j])};
          break;
        }
  }
  out.add(std::move(exact));

  const SentenceSet support = seq.support(u.size());
  const SentenceSet closed = op.close(support);
  Check t8{"t8", Verdict::pass, {}, {}};
  if (closed != support) {
    t8.verdict = Verdict::not_applicable;
    t8.note = "not applicable: the sequence's support is not deductive";
  } else if (report.limits.is_subset_of(support)) {
    t8.note = "support is deductive and every detected limit belongs to it";
  } else {
    t8.verdict = Verdict::discrepancy;
    t8.note = "support is deductive but a detected limit lies outside it";
    t8.witness = {named("outside", report.limits - support)};
  }
  out.add(std::move(t8));

  const SentenceSet with_limits = support | report.limits;
  Check closure{"limit_closure", Verdict::pass, "Cn(support) = support ∪ D", {}};
  if (closed != with_limits) {
    closure.verdict = Verdict::discrepancy;
    closure.note = "Cn(support) differs from support ∪ D";
    closure.witness = {named("Cn(support)", closed), named("support∪D", with_limits),
                       named("difference", (closed - with_limits) | (with_limits - closed))};
  }
  const bool closure_holds = closure.verdict == Verdict::pass;
  out.add(std::move(closure));

  Check inside{"limits_in_deductive_supersets", Verdict::pass, {}, {}};
  const std::vector<std::size_t> free = (u.full_set() - support).elements();
  if (!closure_holds) {
    inside.verdict = Verdict::not_applicable;
    inside.note = "not applicable: conditional on Cn(support) = support ∪ D";
  } else if (free.size() > std::min<std::size_t>(cap, 62)) {
    inside.verdict = Verdict::not_evaluated;
    inside.note = "free part of Ω exceeds the enumeration cap";
  } else {
    std::size_t checked = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
      SentenceSet a = support;
      for (std::size_t j = 0; j < free.size(); ++j)
        if ((bits >> j) & 1U) a.insert(free[j]);
      if (!is_deductive(op, a)) continue;
      ++checked;
      if (!report.limits.is_subset_of(a)) {
        inside.verdict = Verdict::fail;
        inside.witness = {named("A", a), named("outside", report.limits - a)};
        break;
      }
    }
    if (inside.verdict == Verdict::pass)
      inside.note = "D ⊆ A for all " + std::to_string(checked) + " deductive A ⊇ support";
    else
      inside.note = "a deductive superset of the support misses a detected limit";
  }
  out.add(std::move(inside));

  Check tails{"tail_coincidence", Verdict::not_applicable,
              "no partner sequence with a coinciding tail", {}};
  std::size_t compared = 0;
  for (const auto& partner : partners) {
    if (!partner.sequence || !partner.report || partner.sequence == &seq) continue;
    const auto& other = partner.sequence->items;
    std::size_t common = 0;
    while (common < seq.items.size() && common < other.size() &&
           metric.cog(seq.items[seq.items.size() - 1 - common],
                      other[other.size() - 1 - common]) <= metric.tolerance())
      ++common;
    if (common == 0) continue;
    ++compared;
    if (tails.verdict == Verdict::not_applicable) tails.verdict = Verdict::pass;
    const Measure bound2 = eps + partner.report->epsilon;
    for (auto x : limits)
      for (auto y : partner.report->limits.elements())
        if (tails.verdict == Verdict::pass && !(metric.cog(x, y) < bound2)) {
          tails.verdict = Verdict::fail;
          tails.note = "limits of sequences with coinciding tails are too far apart";
          tails.witness = {one("x", x), one("y", y),
                           {"partner", {partner.sequence->name}}};
        }
  }
  if (tails.verdict == Verdict::pass)
    tails.note = "limits within the combined threshold for " + std::to_string(compared) +
                 " partner sequence(s) with coinciding tails";
  out.add(std::move(tails));
  return out;
}

std::optional<std::size_t> detect_black_hole(const PseudoMetric& metric,
                                             const ThoughtSequence& seq, std::size_t x,
                                             Measure eps, const SentenceSet& region) {
  const SentenceSet b = ball(metric, x, eps);
  if (!b.is_subset_of(region)) return std::nullopt;
  std::size_t last_inside = 0;
  for (std::size_t i = 0; i < seq.items.size(); ++i)
    if (b.contains(seq.items[i])) last_inside = i + 1;
  const std::size_t k = last_inside + 1;
  if (k > seq.items.size()) return std::nullopt;
  return k;
}

CompactnessReport check_compactness(const PseudoMetric& metric, const Universe& universe,
                                    const SentenceSet& solution_space,
                                    std::span<const ThoughtSequence> sequences,
                                    std::span<const Measure> eps_grid) {
  require_trusted(metric);
  for (auto eps : eps_grid) require_threshold(eps);
  CompactnessReport report;
  if (sequences.empty())
    report.warnings.push_back({"empty_registry",
                               "no registered sequences; compactness holds vacuously"});

  Check no_limit{"no_limit_at_black_hole", Verdict::not_applicable, "no black hole found", {}};
  for (const auto& seq : sequences) {
    if (seq.items.empty())
      throw std::invalid_argument("check_compactness: sequence '" + seq.name + "' is empty");
    std::vector<std::size_t> centres = solution_space.elements();
    if (seq.virtual_limit) {
      centres.clear();
      if (solution_space.contains(*seq.virtual_limit)) centres.push_back(*seq.virtual_limit);
    }
    for (auto x : centres)
      for (auto eps : eps_grid) {
        auto k = detect_black_hole(metric, seq, x, eps, solution_space);
        if (!k) continue;
        report.black_holes.push_back({seq.name, x, eps, solution_space, *k});
        if (no_limit.verdict == Verdict::not_applicable) {
          no_limit.verdict = Verdict::pass;
          no_limit.note.clear();
        }
        const LimitReport limits = detect_limits(metric, seq, eps);
        if (limits.limits.contains(x) && no_limit.verdict == Verdict::pass) {
          no_limit.verdict = Verdict::fail;
          no_limit.note = "sequence converges at the virtual limit of a black hole";
          no_limit.witness = {{"sequence", {seq.name}}, {"x", {universe.label(x)}}};
        }
      }
  }
  if (no_limit.verdict == Verdict::pass)
    no_limit.note = "no sequence converges at the virtual limit of any of its " +
                    std::to_string(report.black_holes.size()) + " black hole(s)";
  report.checks.add(std::move(no_limit));
  report.compact = report.black_holes.empty();
  return report;
}

}  // namespace ccspace
