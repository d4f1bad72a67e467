#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ccspace {

/// Bit-membership set over the positions 0..width-1 of a label space.
///
/// Universes of up to 64 labels are stored inline in a single machine word;
/// wider universes spill to the heap. All binary operations require both
/// operands to have the same width and throw std::invalid_argument otherwise.
///
/// The ordering operators implement lectic order: the highest differing
/// position decides, so for width <= 64 the order coincides with comparing
/// the sets as unsigned integers with position i as bit i.
class SentenceSet {
 public:
  SentenceSet() = default;
  explicit SentenceSet(std::size_t width);

  static SentenceSet full(std::size_t width);
  static SentenceSet from_mask(std::size_t width, std::uint64_t mask);
  static SentenceSet from_elements(std::size_t width,
                                   const std::vector<std::size_t>& elements);

  std::size_t width() const noexcept { return width_; }

  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  bool is_subset_of(const SentenceSet& other) const;
  bool intersects(const SentenceSet& other) const;

  /// Lowest and highest member positions.
  std::optional<std::size_t> first() const noexcept;
  std::optional<std::size_t> last() const noexcept;

  std::vector<std::size_t> elements() const;

  /// Only valid for width <= 64.
  std::uint64_t to_mask() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  SentenceSet& operator|=(const SentenceSet& other);
  SentenceSet& operator&=(const SentenceSet& other);
  /// Relative complement: removes every member of `other`.
  SentenceSet& operator-=(const SentenceSet& other);

  friend SentenceSet operator|(SentenceSet a, const SentenceSet& b) { return a |= b; }
  friend SentenceSet operator&(SentenceSet a, const SentenceSet& b) { return a &= b; }
  friend SentenceSet operator-(SentenceSet a, const SentenceSet& b) { return a -= b; }

  friend bool operator==(const SentenceSet& a, const SentenceSet& b) noexcept {
    return a.width_ == b.width_ && a.words_ == b.words_;
  }
  friend std::strong_ordering operator<=>(const SentenceSet& a,
                                          const SentenceSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  void require_same_width(const SentenceSet& other) const;
  void require_position(std::size_t i) const;

  std::size_t width_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Returns `within` minus `a`; `a` must be a subset of `within`.
SentenceSet complement_in(const SentenceSet& a, const SentenceSet& within);

}  // namespace ccspace

template <>
struct std::hash<ccspace::SentenceSet> {
  std::size_t operator()(const ccspace::SentenceSet& s) const noexcept {
    return s.hash();
  }
};
