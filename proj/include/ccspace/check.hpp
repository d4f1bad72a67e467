#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ccspace {

enum class Verdict {
  pass,
  fail,
  /// A claim carried over from the theory does not hold on this instance.
  discrepancy,
  not_applicable,
  not_evaluated,
};

std::string_view to_string(Verdict v) noexcept;

/// A labelled set attached to a finding, e.g. {"A", {"t", "a"}}.
struct NamedSet {
  std::string role;
  std::vector<std::string> labels;

  friend bool operator==(const NamedSet&, const NamedSet&) = default;
};

struct Check {
  std::string id;
  Verdict verdict = Verdict::not_evaluated;
  std::string note;
  std::vector<NamedSet> witness;

  bool failed() const noexcept {
    return verdict == Verdict::fail || verdict == Verdict::discrepancy;
  }
};

/// Ordered list of checks; used for theorem, axiom and family reports.
struct CheckReport {
  std::vector<Check> checks;

  const Check* find(std::string_view id) const;
  /// Throws std::out_of_range if absent.
  const Check& at(std::string_view id) const;
  /// True when no check failed or reported a discrepancy.
  bool clean() const;
  void add(Check c) { checks.push_back(std::move(c)); }
};

using TheoremReport = CheckReport;

}  // namespace ccspace
