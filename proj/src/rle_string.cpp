#include "luf/rle_string.hpp"

#include <algorithm>
#include <string>

namespace luf {

RleString RleString::from_runs(std::vector<Run> runs, bool allow_sentinel) {
  if (runs.empty()) throw Error(ErrorCode::kEmptyInput, "empty run list");
  RleString r;
  r.ends_.reserve(runs.size());
  Pos total = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].exp < 1) throw Error(ErrorCode::kInvalidArgument, "run exponent must be positive");
    if (!allow_sentinel && runs[i].ch == kSentinel)
      throw Error(ErrorCode::kInvalidSymbol, "sentinel symbol in input");
    if (i > 0 && runs[i].ch == runs[i - 1].ch)
      throw Error(ErrorCode::kInvalidArgument, "adjacent runs share a symbol");
    if (runs[i].exp > kInfinity - total)
      throw Error(ErrorCode::kInvalidArgument, "string length overflows 63 bits");
    total += runs[i].exp;
    r.ends_.push_back(total);
  }
  r.runs_ = std::move(runs);
  r.tracked_ = TrackedWords(3 * r.runs_.size());
  return r;
}

RleString rle_encode(std::span<const Symbol> text) {
  if (text.empty()) throw Error(ErrorCode::kEmptyInput, "empty input");
  std::vector<Run> runs;
  for (Symbol c : text) {
    if (c == kSentinel) throw Error(ErrorCode::kInvalidSymbol, "sentinel symbol in input");
    if (!runs.empty() && runs.back().ch == c) {
      ++runs.back().exp;
    } else {
      runs.push_back({c, 1});
    }
  }
  return RleString::from_runs(std::move(runs));
}

RleString rle_encode_bytes(std::string_view text) {
  std::vector<Symbol> symbols(text.begin(), text.end());
  std::transform(text.begin(), text.end(), symbols.begin(),
                 [](char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); });
  return rle_encode(symbols);
}

std::vector<Symbol> rle_decode(const RleString& r, Pos cap) {
  if (r.length() > cap)
    throw Error(ErrorCode::kDecodeTooLarge,
                "decoded length " + std::to_string(r.length()) + " exceeds cap " + std::to_string(cap));
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(r.length()));
  for (const Run& run : r.run_list()) out.insert(out.end(), static_cast<std::size_t>(run.exp), run.ch);
  return out;
}

std::size_t run_of_position(const RleString& r, Pos pos) {
  if (pos < 1 || pos > r.length())
    throw Error(ErrorCode::kPositionOutOfRange, "position " + std::to_string(pos) + " out of range");
  std::size_t lo = 1, hi = r.runs();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (r.end(mid) < pos) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace {
void check_occurrence(const RleString& r, Occurrence occ) {
  if (occ.start < 1 || occ.start > occ.end || occ.end > r.length())
    throw Error(ErrorCode::kPositionOutOfRange, "occurrence out of range");
}
}  // namespace

bool is_rle_bounded(const RleString& r, Occurrence occ) {
  check_occurrence(r, occ);
  return r.beg(run_of_position(r, occ.start)) == occ.start && r.end(run_of_position(r, occ.end)) == occ.end;
}

RleString factor_rle(const RleString& r, Occurrence occ) {
  check_occurrence(r, occ);
  std::size_t first = run_of_position(r, occ.start);
  std::size_t last = run_of_position(r, occ.end);
  std::vector<Run> runs(r.run_list().begin() + static_cast<std::ptrdiff_t>(first - 1),
                        r.run_list().begin() + static_cast<std::ptrdiff_t>(last));
  if (first == last) {
    runs.front().exp = occ.length();
  } else {
    runs.front().exp = r.end(first) - occ.start + 1;
    runs.back().exp = occ.end - r.beg(last) + 1;
  }
  return RleString::from_runs(std::move(runs), true);
}

RleString reverse(const RleString& r) {
  std::vector<Run> runs(r.run_list().rbegin(), r.run_list().rend());
  return RleString::from_runs(std::move(runs), true);
}

RleString scale_exponents(const RleString& r, Pos factor) {
  std::vector<Run> runs(r.run_list().begin(), r.run_list().end());
  for (Run& run : runs) run.exp *= factor;
  return RleString::from_runs(std::move(runs), true);
}

}  // namespace luf
