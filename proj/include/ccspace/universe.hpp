#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ccspace/sentence_set.hpp"

namespace ccspace {

struct Diagnostic {
  std::string code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Ordered list of distinct, non-empty labels with index lookup.
class LabelSpace {
 public:
  LabelSpace() = default;
  /// Throws std::invalid_argument on empty or duplicate labels.
  explicit LabelSpace(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;

  SentenceSet empty_set() const { return SentenceSet(size()); }
  SentenceSet full_set() const { return SentenceSet::full(size()); }
  SentenceSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const SentenceSet& s) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct UniverseOptions {
  std::size_t max_symbols = std::size_t{1} << 20;
};

/// Ambient sentence space Omega with the cognitive subspace C and the logic
/// base L. Closures are always taken in Omega, so Cn(C) may leave C.
class Universe {
 public:
  Universe() = default;

  const LabelSpace& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& label(std::size_t i) const { return symbols_.label(i); }
  std::size_t index_of(std::string_view label) const { return symbols_.index_of(label); }

  const SentenceSet& cognitive() const noexcept { return cognitive_; }
  const SentenceSet& logic_base() const noexcept { return logic_base_; }

  SentenceSet empty_set() const { return symbols_.empty_set(); }
  SentenceSet full_set() const { return symbols_.full_set(); }
  SentenceSet set_of(const std::vector<std::string>& labels) const {
    return symbols_.set_of(labels);
  }
  std::vector<std::string> labels_of(const SentenceSet& s) const {
    return symbols_.labels_of(s);
  }

  /// Non-fatal findings recorded at construction.
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  friend Universe make_universe(std::vector<std::string>, const std::vector<std::string>&,
                                const std::vector<std::string>&, const UniverseOptions&);

  LabelSpace symbols_;
  SentenceSet cognitive_;
  SentenceSet logic_base_;
  std::vector<Diagnostic> diagnostics_;
};

/// Builds a universe. Throws std::invalid_argument on duplicate labels and on
/// cognitive/logic-base labels missing from `symbols`; records the diagnostic
/// "logic_base_outside_cognitive" when L is not contained in C.
Universe make_universe(std::vector<std::string> symbols,
                       const std::vector<std::string>& cognitive,
                       const std::vector<std::string>& logic_base,
                       const UniverseOptions& options = {});

}  // namespace ccspace
