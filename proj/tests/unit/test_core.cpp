#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ccspace/error.hpp"
#include "ccspace/measure.hpp"
#include "ccspace/sentence_set.hpp"
#include "ccspace/universe.hpp"

using namespace ccspace;

namespace {

std::set<std::size_t> as_list(std::uint64_t m, std::size_t n) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) out.insert(i);
  return out;
}

std::set<std::size_t> as_list(const SentenceSet& s) {
  auto e = s.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST(SentenceSet, AlgebraMatchesElementLists) {
  const std::size_t n = 6;
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; b += 3) {
      const auto sa = SentenceSet::from_mask(n, a), sb = SentenceSet::from_mask(n, b);
      const auto la = as_list(a, n), lb = as_list(b, n);
      std::set<std::size_t> u, i, d;
      std::set_union(la.begin(), la.end(), lb.begin(), lb.end(), std::inserter(u, u.end()));
      std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::inserter(i, i.end()));
      std::set_difference(la.begin(), la.end(), lb.begin(), lb.end(), std::inserter(d, d.end()));
      EXPECT_EQ(as_list(sa | sb), u);
      EXPECT_EQ(as_list(sa & sb), i);
      EXPECT_EQ(as_list(sa - sb), d);
      EXPECT_EQ(sa.is_subset_of(sb), std::includes(lb.begin(), lb.end(), la.begin(), la.end()));
      EXPECT_EQ(sa.count(), la.size());
    }
}

TEST(SentenceSet, WideSetsSpillPastOneWord) {
  SentenceSet s(200);
  s.insert(0);
  s.insert(130);
  s.insert(199);
  EXPECT_EQ(s.count(), 3u);
  EXPECT_EQ(s.first(), 0u);
  EXPECT_EQ(s.last(), 199u);
  SentenceSet t(200);
  t.insert(130);
  EXPECT_TRUE(t.is_subset_of(s));
  EXPECT_EQ((s - t).elements(), (std::vector<std::size_t>{0, 199}));
  EXPECT_TRUE(t < s);
  EXPECT_THROW(s.insert(200), std::out_of_range);
}

TEST(SentenceSet, LecticOrderMatchesListedExample) {
  // t a b e as positions 0..3
  std::vector<std::uint64_t> listed{0b0001, 0b0011, 0b0101, 0b1001, 0b1011, 0b1101, 0b1111};
  for (std::size_t i = 0; i + 1 < listed.size(); ++i)
    EXPECT_LT(SentenceSet::from_mask(4, listed[i]), SentenceSet::from_mask(4, listed[i + 1]));
}

TEST(SentenceSet, WidthMismatchThrows) {
  EXPECT_THROW(SentenceSet(3) | SentenceSet(4), std::invalid_argument);
}

TEST(SentenceSet, ComplementIn) {
  const auto within = SentenceSet::from_mask(4, 0b0111);
  EXPECT_EQ(complement_in(SentenceSet::from_mask(4, 0b0010), within), SentenceSet::from_mask(4, 0b0101));
  EXPECT_EQ(complement_in(SentenceSet(4), within), within);
  EXPECT_EQ(complement_in(within, within), SentenceSet(4));
  EXPECT_THROW(complement_in(SentenceSet::from_mask(4, 0b1000), within), std::invalid_argument);
  for (std::uint64_t a = 0; a < 8; ++a) {
    const auto s = SentenceSet::from_mask(4, a);
    const auto c = complement_in(s, within);
    EXPECT_EQ(complement_in(c, within), s);
    EXPECT_EQ(c | s, within);
    EXPECT_TRUE((c & s).empty());
  }
}

TEST(Universe, TinyCogAccepted) {
  const Universe u = make_universe({"t", "a", "b", "e"}, {"t", "a", "b"}, {"t"});
  EXPECT_TRUE(u.diagnostics().empty());
  EXPECT_EQ(u.size(), 4u);
  EXPECT_EQ(u.labels_of(u.cognitive()), (std::vector<std::string>{"t", "a", "b"}));
}

TEST(Universe, LogicBaseOutsideCognitiveWarns) {
  const Universe u = make_universe({"t", "a", "b"}, {"a", "b"}, {"t"});
  ASSERT_EQ(u.diagnostics().size(), 1u);
  EXPECT_EQ(u.diagnostics()[0].code, "logic_base_outside_cognitive");
  EXPECT_EQ(u.diagnostics()[0].message, "logic base outside cognitive space; τ will be empty");
}

TEST(Universe, RejectsMalformedLabels) {
  EXPECT_THROW(make_universe({"a", "a"}, {}, {}), std::invalid_argument);
  EXPECT_THROW(make_universe({"a", ""}, {}, {}), std::invalid_argument);
  EXPECT_THROW(make_universe({"a"}, {"z"}, {}), std::invalid_argument);
  EXPECT_THROW(make_universe({"a"}, {}, {"z"}), std::invalid_argument);
}

TEST(Measure, DecimalArithmeticIsExact) {
  const auto a = Measure::from_double(0.3), b = Measure::from_double(0.1);
  EXPECT_EQ(abs_diff(a, b), Measure::from_double(0.2));
  EXPECT_EQ(abs_diff(Measure::from_double(0.9), Measure::from_double(0.7)), Measure::from_double(0.2));
  EXPECT_FALSE(abs_diff(Measure::from_double(0.9), Measure::from_double(0.7)) < Measure::from_double(0.2));
  EXPECT_TRUE(Measure::from_double(0.5).in_open_unit());
  EXPECT_FALSE(Measure::one().in_open_unit());
  EXPECT_THROW(Measure::from_double(std::nan("")), std::invalid_argument);
}
