#include "ccspace/sentence_set.hpp"

#include <stdexcept>
#include <string>

namespace ccspace {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

}  // namespace

SentenceSet::SentenceSet(std::size_t width)
    : width_(width), words_(word_count(width), 0) {}

SentenceSet SentenceSet::full(std::size_t width) {
  SentenceSet s(width);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (width % 64 != 0) s.words_.back() = (std::uint64_t{1} << (width % 64)) - 1;
  return s;
}

SentenceSet SentenceSet::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > 64) throw std::invalid_argument("from_mask requires width <= 64");
  if (width < 64 && (mask >> width) != 0)
    throw std::invalid_argument("mask has bits outside the set width");
  SentenceSet s(width);
  if (width > 0) s.words_[0] = mask;
  return s;
}

SentenceSet SentenceSet::from_elements(std::size_t width,
                                       const std::vector<std::size_t>& elements) {
  SentenceSet s(width);
  for (auto i : elements) s.insert(i);
  return s;
}

void SentenceSet::require_position(std::size_t i) const {
  if (i >= width_)
    throw std::out_of_range("position " + std::to_string(i) +
                            " outside set of width " + std::to_string(width_));
}

void SentenceSet::require_same_width(const SentenceSet& other) const {
  if (width_ != other.width_)
    throw std::invalid_argument("set width mismatch: " + std::to_string(width_) +
                                " vs " + std::to_string(other.width_));
}

bool SentenceSet::contains(std::size_t i) const {
  require_position(i);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

void SentenceSet::insert(std::size_t i) {
  require_position(i);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void SentenceSet::erase(std::size_t i) {
  require_position(i);
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::size_t SentenceSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool SentenceSet::empty() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool SentenceSet::is_subset_of(const SentenceSet& other) const {
  require_same_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool SentenceSet::intersects(const SentenceSet& other) const {
  require_same_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

std::optional<std::size_t> SentenceSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<std::size_t> SentenceSet::last() const noexcept {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w] != 0)
      return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[w]));
  return std::nullopt;
}

std::vector<std::size_t> SentenceSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::uint64_t SentenceSet::to_mask() const {
  if (width_ > 64) throw std::invalid_argument("to_mask requires width <= 64");
  return words_.empty() ? 0 : words_[0];
}

SentenceSet& SentenceSet::operator|=(const SentenceSet& other) {
  require_same_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

SentenceSet& SentenceSet::operator&=(const SentenceSet& other) {
  require_same_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

SentenceSet& SentenceSet::operator-=(const SentenceSet& other) {
  require_same_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const SentenceSet& a, const SentenceSet& b) noexcept {
  if (a.width_ != b.width_) return a.width_ <=> b.width_;
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  return std::strong_ordering::equal;
}

std::size_t SentenceSet::hash() const noexcept {
  // splitmix-style mixing over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

SentenceSet complement_in(const SentenceSet& a, const SentenceSet& within) {
  if (!a.is_subset_of(within))
    throw std::invalid_argument("complement_in: set is not contained in the reference set");
  return within - a;
}

}  // namespace ccspace
