#pragma once

#include <compare>
#include <cstdint>

namespace ccspace {

/// Fixed-point value in [0, 1] with 1e-12 resolution.
///
/// Weights, distances and thresholds are decimal data; holding them as
/// integer ticks keeps |w(x) - w(y)| and the strict comparisons against a
/// threshold exact (0.3 - 0.1 is exactly 0.2 here, unlike in binary floating
/// point).
class Measure {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000'000;

  constexpr Measure() = default;

  static constexpr Measure from_ticks(std::int64_t ticks) { return Measure(ticks); }
  /// Rounds to the nearest tick.
  static Measure from_double(double value);
  static constexpr Measure zero() { return Measure(0); }
  static constexpr Measure one() { return Measure(kScale); }

  constexpr std::int64_t ticks() const noexcept { return ticks_; }
  double to_double() const noexcept {
    return static_cast<double>(ticks_) / static_cast<double>(kScale);
  }

  /// True for values strictly between 0 and 1.
  constexpr bool in_open_unit() const noexcept { return ticks_ > 0 && ticks_ < kScale; }
  constexpr bool in_closed_unit() const noexcept { return ticks_ >= 0 && ticks_ <= kScale; }

  friend constexpr Measure operator+(Measure a, Measure b) { return Measure(a.ticks_ + b.ticks_); }
  friend constexpr Measure operator-(Measure a, Measure b) { return Measure(a.ticks_ - b.ticks_); }
  friend constexpr Measure abs_diff(Measure a, Measure b) {
    return Measure(a.ticks_ > b.ticks_ ? a.ticks_ - b.ticks_ : b.ticks_ - a.ticks_);
  }
  friend constexpr auto operator<=>(Measure, Measure) = default;

 private:
  constexpr explicit Measure(std::int64_t ticks) : ticks_(ticks) {}
  std::int64_t ticks_ = 0;
};

}  // namespace ccspace
