#include "luf/rle_text.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace luf {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

RleString parse_rle_text(std::string_view text) {
  std::vector<Run> runs;
  Pos total = 0;
  std::size_t line = 1;
  std::size_t k = 0;
  while (k < text.size()) {
    const char c = text[k];
    if (c == '\n') {
      ++line;
      ++k;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    if (c == '#') {
      while (k < text.size() && text[k] != '\n') ++k;
      continue;
    }
    std::size_t end = k;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '#') ++end;
    const std::string_view token = text.substr(k, end - k);
    k = end;
    if (token.size() < 3 || token[1] != ':') fail(line, "expected c:exp, got '" + std::string(token) + "'");
    const std::string_view digits = token.substr(2);
    Pos exp = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exp);
    if (ec == std::errc::result_out_of_range) fail(line, "exponent exceeds 2^63-1 in '" + std::string(token) + "'");
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.front() == '-' || digits.front() == '+')
      fail(line, "bad exponent in '" + std::string(token) + "'");
    if (exp < 1) fail(line, "exponent must be positive in '" + std::string(token) + "'");
    if (exp > std::numeric_limits<Pos>::max() - total) fail(line, "total length exceeds 2^63-1");
    total += exp;
    const Symbol ch = static_cast<unsigned char>(token[0]);
    if (!runs.empty() && runs.back().ch == ch) {
      runs.back().exp += exp;
    } else {
      runs.push_back({ch, exp});
    }
  }
  if (runs.empty()) throw Error(ErrorCode::kEmptyInput, "no runs in input");
  return RleString::from_runs(std::move(runs));
}

std::string format_rle_text(const RleString& r) {
  std::string out;
  for (const Run& run : r.run_list()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(static_cast<char>(run.ch));
    out.push_back(':');
    out += std::to_string(run.exp);
  }
  out.push_back('\n');
  return out;
}

}  // namespace luf
