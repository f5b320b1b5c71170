#include <gtest/gtest.h>

#include "luf/driver.hpp"
#include "luf/oracles.hpp"
#include "test_util.hpp"

#include <algorithm>

namespace luf {
namespace {

TEST(Driver, UnaryInput) {
  const auto t = RleString::from_runs({{7, 12}});
  const auto r = longest_unbordered_factors(t);
  EXPECT_EQ(r.length, 1);
  EXPECT_EQ(r.occurrences, (std::vector<Occurrence>{{1, 1}}));
}

std::vector<Occurrence> sorted(std::vector<Occurrence> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(LongestShortUb, Examples) {
  const auto r = longest_short_ub(rle_encode_bytes("aaabbcccccabbbb"));
  EXPECT_EQ(r.length, 15);
  EXPECT_EQ(r.occurrences, (std::vector<Occurrence>{{1, 15}}));
  EXPECT_EQ(longest_short_ub(rle_encode_bytes("aaaa")).occurrences, (std::vector<Occurrence>{{1, 1}}));
  const auto ab = longest_short_ub(rle_encode_bytes("abababab"));
  EXPECT_EQ(ab.length, 2);
  EXPECT_EQ(ab.occurrences, sorted({{1, 2}, {3, 4}, {5, 6}, {7, 8}, {2, 3}, {4, 5}, {6, 7}}));
}

TEST(Driver, Examples) {
  const auto a = longest_unbordered_factors(rle_encode_bytes("aaabbbbaaaaaccaaaabbbaa"));
  EXPECT_EQ(a.length, 20);
  EXPECT_EQ(a.occurrences, (std::vector<Occurrence>{{4, 23}}));
  const auto b = longest_unbordered_factors(rle_encode_bytes("aabbaabbaabb"));
  EXPECT_EQ(b.length, 4);
  EXPECT_EQ(b.occurrences, sorted({{1, 4}, {5, 8}, {9, 12}, {3, 6}, {7, 10}}));
}

TEST(Driver, ThreadCountDoesNotChangeOutput) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = test::random_rle(rng, 30 + rng() % 200, 2 + rng() % 2, 1 + rng() % 4);
    DriverOptions par;
    par.threads = 4;
    ASSERT_EQ(longest_unbordered_factors(t, par).occurrences, longest_unbordered_factors(t).occurrences);
  }
}

TEST(Driver, NoCascadeAgrees) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = test::random_rle(rng, 30 + rng() % 200, 2 + rng() % 2, 1 + rng() % 4);
    DriverOptions plain;
    plain.wlsq.cascade = false;
    ASSERT_EQ(longest_unbordered_factors(t, plain).occurrences, longest_unbordered_factors(t).occurrences);
  }
}

TEST(Driver, ResultInvariants) {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = test::random_rle(rng, 2 + rng() % 80, 2 + rng() % 3, 1 + rng() % 4);
    const auto text = rle_decode(t);
    const auto r = longest_unbordered_factors(t);
    ASSERT_LE(r.occurrences.size(), t.runs() - 1);
    for (const auto& occ : r.occurrences) {
      ASSERT_EQ(occ.length(), r.length);
      ASSERT_TRUE(is_rle_bounded(t, occ));
      const std::span<const Symbol> w(text.data() + occ.start - 1, static_cast<std::size_t>(occ.length()));
      ASSERT_TRUE(oracle::naive_is_unbordered(w));
    }
  }
}

TEST(Driver, MatchesOracleOnRandomStrings) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t m = 1 + rng() % 60;
    const Symbol sigma = 2 + rng() % 3;
    const Pos max_exp = 1 + rng() % 4;
    const auto t = test::random_rle(rng, m, sigma, max_exp);
    const auto expected = oracle::naive_luf(rle_decode(t));
    const auto got = longest_unbordered_factors(t);
    ASSERT_EQ(got.length, expected.length) << "trial " << trial << " m=" << m;
    ASSERT_EQ(got.occurrences, expected.occurrences) << "trial " << trial;
  }
}

}  // namespace
}  // namespace luf
