#include <gtest/gtest.h>

#include <random>

#include "luf/oracles.hpp"
#include "luf/rle_index.hpp"
#include "luf/rmq.hpp"
#include "test_util.hpp"

namespace luf {
namespace {

const RleString& example1() {
  static const RleString r = rle_encode_bytes("aaabbcccccabbbb");
  return r;
}

TEST(TruncatedIndex, Example) {
  const TruncatedRleIndex idx(example1());
  std::vector<std::size_t> sa;
  std::vector<Pos> lcp;
  for (std::size_t r = 1; r <= idx.size(); ++r) {
    sa.push_back(idx.sa(r));
    lcp.push_back(idx.lcp(r));
    EXPECT_EQ(idx.isa(idx.sa(r)), r);
  }
  EXPECT_EQ(sa, (std::vector<std::size_t>{4, 1, 5, 2, 3}));
  EXPECT_EQ(lcp, (std::vector<Pos>{-1, 3, 0, 1, 0}));
}

TEST(TruncatedIndex, SingleRun) {
  const TruncatedRleIndex idx(rle_encode_bytes("aaa"));
  EXPECT_EQ(idx.size(), 1u);
  EXPECT_EQ(idx.sa(1), 1u);
  EXPECT_EQ(idx.lcp(1), -1);
}

TEST(TruncatedIndex, SortMatchesDecodedSuffixes) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 50, 2 + rng() % 3, 1 + rng() % 5);
    const auto text = rle_decode(t);
    const TruncatedRleIndex idx(t);
    for (std::size_t r = 2; r <= idx.size(); ++r) {
      const Pos a = t.end(idx.sa(r - 1));
      const Pos b = t.end(idx.sa(r));
      const Pos l = oracle::naive_lcp(text, a, b);
      ASSERT_EQ(idx.lcp(r), l);
      const Pos n = t.length();
      const bool less = a + l > n || (b + l <= n && text[a + l - 1] < text[b + l - 1]);
      ASSERT_TRUE(less) << "ranks " << r - 1 << "," << r;
    }
  }
}

TEST(Rlelcp, Examples) {
  const TruncatedRleIndex idx(example1());
  EXPECT_EQ(idx.rlelcp(1, 1, 4, 1), 1);
  EXPECT_EQ(idx.rlelcp(2, 1, 5, 1), 2);
  EXPECT_EQ(idx.rlelcp(3, 2, 3, 2), 9);
  try {
    idx.rlelcp(1, 4, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOffsetOutOfRange);
  }
}

TEST(Rlelcp, MatchesOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 60, 2 + rng() % 3, 1 + rng() % 6);
    const auto text = rle_decode(t);
    const TruncatedRleIndex idx(t);
    for (int q = 0; q < 200; ++q) {
      const std::size_t i = 1 + rng() % t.runs();
      const std::size_t j = 1 + rng() % t.runs();
      const Pos p = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(t.exp(i)));
      const Pos qq = 1 + static_cast<Pos>(rng() % static_cast<std::uint64_t>(t.exp(j)));
      ASSERT_EQ(idx.rlelcp(i, p, j, qq), oracle::naive_lcp(text, t.beg(i) + p - 1, t.beg(j) + qq - 1));
    }
  }
}

TEST(LongestPref, Examples) {
  const LongestPrefIndex lp(example1(), 2, 5);
  EXPECT_EQ(lp.query(1, kInfinity), std::optional<std::size_t>(4));
  EXPECT_EQ(lp.query(1, 2), std::optional<std::size_t>(2));
  // Every z in [4..5] has lcp >= 1 with T[End_5..] = "b".
  const LongestPrefIndex tail(rle_encode_bytes("abab"), 2, 2);
  EXPECT_EQ(tail.query(4, 0), std::nullopt);
}

TEST(LongestPref, MatchesOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = test::random_rle(rng, 2 + rng() % 50, 2 + rng() % 2, 1 + rng() % 4);
    const auto text = rle_decode(t);
    const std::size_t x = 1 + rng() % t.runs();
    const std::size_t y = x + rng() % (t.runs() - x + 1);
    const LongestPrefIndex lp(t, x, y);
    for (int q = 0; q < 100; ++q) {
      const std::size_t h = 1 + rng() % t.runs();
      const Pos limit = rng() % 4 == 0 ? kInfinity : static_cast<Pos>(rng() % 12);
      ASSERT_EQ(lp.query(h, limit), oracle::naive_longest_pref(text, x, y, h, limit))
          << trial << " x=" << x << " y=" << y << " h=" << h << " l=" << limit;
    }
  }
}

TEST(ReversedIndex, Examples) {
  const ReversedIndex rev(example1());
  EXPECT_EQ(rev.lcs(5, 5), 5);
  EXPECT_EQ(rev.lcs(5, 15), 2);
  EXPECT_EQ(rev.lcs(3, 11), 1);
}

TEST(ReversedIndex, MatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 50, 2 + rng() % 3, 1 + rng() % 5);
    const auto text = rle_decode(t);
    const ReversedIndex rev(t);
    for (int q = 0; q < 100; ++q) {
      const Pos a = 1 + static_cast<Pos>(rng() % text.size());
      const Pos b = 1 + static_cast<Pos>(rng() % text.size());
      ASSERT_EQ(rev.lcs(a, b), oracle::naive_lcs(text, a, b));
    }
  }
}

TEST(FindOccurrences, Examples) {
  const TruncatedRleIndex idx(rle_encode_bytes("aaabbbbaaaaaccaaaabbbaa"));
  EXPECT_EQ(idx.find_occurrences(rle_encode_bytes("bba")), (std::vector<Pos>{6, 20}));
  EXPECT_EQ(idx.find_occurrences(rle_encode_bytes("aa")), (std::vector<Pos>{1, 2, 8, 9, 10, 11, 15, 16, 17, 22}));
  EXPECT_TRUE(idx.find_occurrences(rle_encode_bytes(std::string(30, 'a'))).empty());
}

TEST(FindOccurrences, MatchesOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 40, 2 + rng() % 2, 1 + rng() % 4);
    const auto text = rle_decode(t);
    const TruncatedRleIndex idx(t);
    for (int q = 0; q < 30; ++q) {
      const Pos a = 1 + static_cast<Pos>(rng() % text.size());
      const Pos b = a + static_cast<Pos>(rng() % std::min<std::uint64_t>(12, text.size() - a + 1));
      const Occurrence f{a, b};
      const std::span<const Symbol> pattern(text.data() + a - 1, static_cast<std::size_t>(b - a + 1));
      const auto expected = oracle::naive_occurrences(text, pattern);
      ASSERT_EQ(idx.find_occurrences(factor_rle(t, f)), expected) << test::show(t) << " f=" << a << "," << b;
      ASSERT_EQ(idx.find_factor_occurrences(f), expected);
    }
  }
}

TEST(SparseTable, MatchesLinearScan) {
  std::mt19937_64 rng(13);
  std::vector<Pos> v(500);
  for (auto& x : v) x = static_cast<Pos>(rng() % 50);
  const SparseTable<Pos> mn(v);
  const SparseTable<Pos, std::greater<Pos>> mx(v);
  for (int q = 0; q < 100000; ++q) {
    std::size_t lo = rng() % v.size(), hi = rng() % v.size();
    if (lo > hi) std::swap(lo, hi);
    const auto first = v.begin() + static_cast<std::ptrdiff_t>(lo);
    const auto last = v.begin() + static_cast<std::ptrdiff_t>(hi) + 1;
    ASSERT_EQ(mn.query(lo, hi), static_cast<std::size_t>(std::min_element(first, last) - v.begin()));
    ASSERT_EQ(mx.query(lo, hi), static_cast<std::size_t>(std::max_element(first, last) - v.begin()));
  }
}

}  // namespace
}  // namespace luf
