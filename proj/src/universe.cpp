#include "ccspace/universe.hpp"

#include <stdexcept>

namespace ccspace {

LabelSpace::LabelSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw std::invalid_argument("empty label");
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate label '" + labels_[i] + "'");
  }
}

std::optional<std::size_t> LabelSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabelSpace::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::invalid_argument("unknown label '" + std::string(label) + "'");
}

SentenceSet LabelSpace::set_of(const std::vector<std::string>& labels) const {
  SentenceSet s = empty_set();
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

std::vector<std::string> LabelSpace::labels_of(const SentenceSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.count());
  s.for_each([&](std::size_t i) { out.push_back(labels_.at(i)); });
  return out;
}

Universe make_universe(std::vector<std::string> symbols,
                       const std::vector<std::string>& cognitive,
                       const std::vector<std::string>& logic_base,
                       const UniverseOptions& options) {
  if (symbols.size() > options.max_symbols)
    throw std::invalid_argument("universe has " + std::to_string(symbols.size()) +
                                " symbols; configured maximum is " +
                                std::to_string(options.max_symbols));
  Universe u;
  u.symbols_ = LabelSpace(std::move(symbols));
  u.cognitive_ = u.symbols_.set_of(cognitive);
  u.logic_base_ = u.symbols_.set_of(logic_base);
  if (!u.logic_base_.is_subset_of(u.cognitive_))
    u.diagnostics_.push_back({"logic_base_outside_cognitive",
                              "logic base outside cognitive space; τ will be empty"});
  return u;
}

}  // namespace ccspace
