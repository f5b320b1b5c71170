#include <gtest/gtest.h>

#include <string>

#include "luf/rle_string.hpp"

namespace luf {
namespace {

std::vector<Run> runs_of(std::initializer_list<std::pair<char, Pos>> list) {
  std::vector<Run> out;
  for (auto [c, e] : list) out.push_back({static_cast<Symbol>(static_cast<unsigned char>(c)), e});
  return out;
}

std::vector<Run> list(const RleString& r) {
  const auto span = r.run_list();
  return {span.begin(), span.end()};
}

const RleString& example1() {
  static const RleString r = rle_encode_bytes("aaabbcccccabbbb");
  return r;
}

std::string decode_string(const RleString& r) {
  std::string s;
  for (Symbol c : rle_decode(r)) s.push_back(static_cast<char>(c));
  return s;
}

TEST(RleEncode, Examples) {
  EXPECT_EQ(list(example1()), runs_of({{'a', 3}, {'b', 2}, {'c', 5}, {'a', 1}, {'b', 4}}));
  EXPECT_EQ(example1().runs(), 5u);
  EXPECT_EQ(example1().length(), 15);
  EXPECT_EQ(list(rle_encode_bytes("a")), runs_of({{'a', 1}}));
  EXPECT_EQ(rle_encode_bytes("abab").runs(), 4u);
}

TEST(RleEncode, Errors) {
  try {
    rle_encode_bytes("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
  const std::vector<Symbol> bad{1, kSentinel};
  try {
    rle_encode(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSymbol);
  }
  EXPECT_THROW(RleString::from_runs(runs_of({{'a', 1}, {'a', 2}})), Error);
  EXPECT_THROW(RleString::from_runs(runs_of({{'a', 0}})), Error);
}

TEST(RleDecode, Examples) {
  EXPECT_EQ(decode_string(example1()), "aaabbcccccabbbb");
  EXPECT_EQ(decode_string(RleString::from_runs(runs_of({{'x', 2}, {'y', 1}}))), "xxy");
  try {
    rle_decode(RleString::from_runs(runs_of({{'a', Pos{1} << 40}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDecodeTooLarge);
  }
}

TEST(RleDecode, RoundTrip) {
  for (const char* s : {"a", "ab", "aabbbaaa", "abcabcabc", "zzzzzz"}) {
    EXPECT_EQ(decode_string(rle_encode_bytes(s)), s);
  }
}

TEST(RunOfPosition, Examples) {
  EXPECT_EQ(run_of_position(example1(), 7), 3u);
  EXPECT_EQ(run_of_position(example1(), 1), 1u);
  EXPECT_EQ(run_of_position(example1(), 11), 4u);
  EXPECT_EQ(run_of_position(example1(), 15), 5u);
  EXPECT_THROW(run_of_position(example1(), 0), Error);
  EXPECT_THROW(run_of_position(example1(), 16), Error);
}

TEST(RleBounded, Examples) {
  EXPECT_TRUE(is_rle_bounded(example1(), {4, 11}));
  EXPECT_TRUE(is_rle_bounded(example1(), {1, 15}));
  EXPECT_FALSE(is_rle_bounded(example1(), {2, 3}));
}

TEST(FactorRle, Examples) {
  EXPECT_EQ(list(factor_rle(example1(), {4, 11})), runs_of({{'b', 2}, {'c', 5}, {'a', 1}}));
  EXPECT_EQ(factor_rle(example1(), {1, 15}), example1());
  EXPECT_EQ(list(factor_rle(example1(), {2, 7})), runs_of({{'a', 2}, {'b', 2}, {'c', 2}}));
  EXPECT_EQ(list(factor_rle(example1(), {12, 13})), runs_of({{'b', 2}}));
}

TEST(Reverse, Examples) {
  EXPECT_EQ(list(reverse(RleString::from_runs(runs_of({{'a', 3}, {'b', 2}})))), runs_of({{'b', 2}, {'a', 3}}));
  EXPECT_EQ(reverse(rle_encode_bytes("a")), rle_encode_bytes("a"));
  EXPECT_EQ(list(reverse(example1())), runs_of({{'b', 4}, {'a', 1}, {'c', 5}, {'b', 2}, {'a', 3}}));
}

TEST(ScaleExponents, MultipliesEveryRun) {
  const auto scaled = scale_exponents(example1(), 16);
  EXPECT_EQ(scaled.length(), 15 * 16);
  EXPECT_EQ(scaled.exp(3), 80);
  EXPECT_EQ(scaled.beg(2), 3 * 16 + 1);
}

TEST(RleString, AstronomicalExponents) {
  const Pos big = Pos{1} << 61;
  const auto r = RleString::from_runs(runs_of({{'a', big}, {'b', big}}));
  EXPECT_EQ(r.length(), 2 * big);
  EXPECT_EQ(run_of_position(r, big + 1), 2u);
}

}  // namespace
}  // namespace luf

#include "luf/rle_text.hpp"

namespace luf {
namespace {

TEST(RleText, ParsesTokensAndComments) {
  const auto r = parse_rle_text("# example\na:3 b:2\tc:5 # trailing\n a:1 b:4\n");
  EXPECT_EQ(r, rle_encode_bytes("aaabbcccccabbbb"));
  EXPECT_EQ(parse_rle_text("a:1 a:2 b:1"), rle_encode_bytes("aaab"));
  EXPECT_EQ(parse_rle_text("a:9223372036854775807").length(), Pos{9223372036854775807});
  EXPECT_EQ(format_rle_text(r), "a:3 b:2 c:5 a:1 b:4\n");
}

TEST(RleText, RejectsMalformedInput) {
  for (const char* bad : {"a3", "a:", "a:0", "a:-1", "ab:3", "a:3x", "a:9223372036854775808",
                          "a:9223372036854775807 b:1"}) {
    try {
      parse_rle_text(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
  try {
    parse_rle_text("  # nothing\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyInput);
  }
}

TEST(RleText, ReportsLineNumber) {
  try {
    parse_rle_text("a:1\nb:2\nc:x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

}  // namespace
}  // namespace luf
