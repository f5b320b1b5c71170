#include <gtest/gtest.h>

#include <random>
#include <string_view>

#include "luf/borders.hpp"
#include "luf/oracles.hpp"
#include "test_util.hpp"

namespace luf {
namespace {

std::vector<std::size_t> vec(std::initializer_list<std::size_t> v) { return v; }

std::span<const char> chars(std::string_view s) { return {s.data(), s.size()}; }

oracle::Text text_of(std::string_view s) {
  oracle::Text t;
  for (char c : s) t.push_back(static_cast<unsigned char>(c));
  return t;
}

TEST(BorderArray, Examples) {
  EXPECT_EQ(border_array(chars("abaababa")), vec({0, 0, 1, 1, 2, 3, 2, 3}));
  EXPECT_EQ(border_array(chars("aaaa")), vec({0, 1, 2, 3}));
  EXPECT_EQ(border_array(chars("abc")), vec({0, 0, 0}));
}

TEST(BorderGroupArray, Examples) {
  EXPECT_EQ(border_group_array(chars("abab")), vec({1, 2, 3, 2}));
  EXPECT_EQ(border_group_array(chars("aaaa")), vec({1, 1, 1, 1}));
  EXPECT_EQ(border_group_array(chars("abc")), vec({1, 2, 3}));
}

TEST(BorderArrays, MatchOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    oracle::Text w(1 + rng() % 24);
    const Symbol sigma = 1 + rng() % 3;
    for (auto& c : w) c = static_cast<Symbol>(rng() % sigma);
    const std::span<const Symbol> s(w);
    ASSERT_EQ(border_array(s), oracle::naive_border_array(s));
    ASSERT_EQ(border_group_array(s), oracle::naive_border_group_array(s));
  }
}

TEST(Rsbord, Examples) {
  EXPECT_EQ(rsbord(rle_encode_bytes("aaabbbbaaaaaccaaaabbbaa")), vec({1, 0, 1, 0, 1, 2, 1}));
  EXPECT_EQ(rsbord(rle_encode_bytes("ab")), vec({0, 0}));
  EXPECT_EQ(rsbord(rle_encode_bytes("aabbaabb")), vec({1, 0, 1, 2}));
}

TEST(Rsbord, MatchesOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 40, 2 + rng() % 3, 1 + rng() % 4);
    ASSERT_EQ(rsbord(t), oracle::naive_rsbord(rle_decode(t))) << trial;
  }
}

TEST(WindowLongestBorder, Examples) {
  const auto w1 = rle_encode_bytes("abaababa");
  const auto r1 = window_longest_border(w1, {1, w1.length()});
  EXPECT_EQ(r1.pp, 4u);
  EXPECT_EQ(r1.border_len, 3);
  EXPECT_EQ(r1.border_rle, 3u);

  const auto w2 = rle_encode_bytes("aabb");
  const auto r2 = window_longest_border(w2, {1, 4});
  EXPECT_EQ(r2.pp, 2u);
  EXPECT_EQ(r2.border_len, 0);

  const auto w3 = rle_encode_bytes("aaa");
  const auto r3 = window_longest_border(w3, {1, 3});
  EXPECT_EQ(r3.pp, 0u);
  EXPECT_EQ(r3.border_len, 2);
}

TEST(WindowLongestBorder, MatchesOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 30, 2 + rng() % 2, 1 + rng() % 4);
    const std::size_t a = 1 + rng() % t.runs();
    const std::size_t b = a + rng() % (t.runs() - a + 1);
    const Occurrence occ{t.beg(a), t.end(b)};
    const auto text = rle_decode(t);
    const std::span<const Symbol> w(text.data() + occ.start - 1, static_cast<std::size_t>(occ.length()));
    const auto got = window_longest_border(t, occ);
    ASSERT_EQ(got.border_len, oracle::longest_border(w)) << trial;
    ASSERT_EQ(got.pp, oracle::naive_pp(w)) << trial;
  }
}

TEST(Oracle, PinnedValues) {
  EXPECT_EQ(oracle::naive_pp(text_of("abaababa")), 4u);
  EXPECT_TRUE(oracle::naive_is_unbordered(text_of("aab")));
  EXPECT_EQ(oracle::naive_shortest_border(text_of("abaababa")), 1);
  EXPECT_EQ(oracle::naive_shortest_border(text_of("aa")), 1);
  EXPECT_EQ(oracle::naive_rsbord(text_of("aaabbbbaaaaaccaaaabbbaa")), vec({1, 0, 1, 0, 1, 2, 1}));
  const auto luf = oracle::naive_luf(text_of("abaab"));
  EXPECT_EQ(luf.length, 3);
  EXPECT_EQ(luf.occurrences, (std::vector<Occurrence>{{2, 4}, {3, 5}}));
  EXPECT_EQ(oracle::naive_luf(text_of("aaaa")).occurrences, (std::vector<Occurrence>{{1, 1}}));
  EXPECT_EQ(oracle::naive_luf(text_of("aaabbcccccabbbb")).occurrences, (std::vector<Occurrence>{{1, 15}}));
}

TEST(Oracle, BudgetEnforced) {
  oracle::OracleBudget budget;
  budget.max_n = 4;
  try {
    oracle::naive_luf(text_of("abcde"), budget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

}  // namespace
}  // namespace luf

namespace luf {
namespace {

TEST(Oracle, SelfConsistent) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = test::random_rle(rng, 1 + rng() % 20, 2 + rng() % 3, 1 + rng() % 3);
    const auto text = rle_decode(t);
    const auto luf = oracle::naive_luf(text);
    for (const auto& occ : luf.occurrences) {
      const std::span<const Symbol> w(text.data() + occ.start - 1, static_cast<std::size_t>(occ.length()));
      ASSERT_TRUE(oracle::naive_is_unbordered(w) || t.is_unary());
    }
    const auto rs = oracle::naive_rsbord(text);
    for (std::size_t i = 1; i <= t.runs(); ++i) {
      const std::span<const Symbol> prefix(text.data(), static_cast<std::size_t>(t.end(i)));
      ASSERT_EQ(rs[i - 1] == 0, oracle::naive_is_unbordered(prefix));
    }
  }
}

}  // namespace
}  // namespace luf
