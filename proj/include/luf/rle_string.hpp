#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "luf/stats.hpp"
#include "luf/types.hpp"

namespace luf {

struct Run {
  Symbol ch = 0;
  Pos exp = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

inline constexpr Pos kDefaultDecodeCap = Pos{1} << 26;

/// Run-length encoded string. Run indices and text positions are 1-based:
/// run i covers positions beg(i)..end(i).
class RleString {
 public:
  RleString() = default;

  /// Builds from a run list, merging nothing: adjacent runs must differ and
  /// exponents must be positive. The sentinel is rejected unless allowed.
  static RleString from_runs(std::vector<Run> runs, bool allow_sentinel = false);

  std::size_t runs() const { return runs_.size(); }
  Pos length() const { return runs_.empty() ? 0 : ends_.back(); }

  Symbol ch(std::size_t i) const { return runs_[i - 1].ch; }
  Pos exp(std::size_t i) const { return runs_[i - 1].exp; }
  Pos beg(std::size_t i) const { return ends_[i - 1] - runs_[i - 1].exp + 1; }
  Pos end(std::size_t i) const { return ends_[i - 1]; }
  const Run& run(std::size_t i) const { return runs_[i - 1]; }

  std::span<const Run> run_list() const { return runs_; }
  /// Runs first..last (1-based, inclusive) as a span.
  std::span<const Run> run_span(std::size_t first, std::size_t last) const {
    return std::span<const Run>(runs_).subspan(first - 1, last - first + 1);
  }

  bool is_unary() const { return runs_.size() == 1; }

  friend bool operator==(const RleString& a, const RleString& b) { return a.runs_ == b.runs_; }

 private:
  std::vector<Run> runs_;
  std::vector<Pos> ends_;  // prefix sums of exponents
  TrackedWords tracked_;
};

RleString rle_encode(std::span<const Symbol> text);
RleString rle_encode_bytes(std::string_view text);

std::vector<Symbol> rle_decode(const RleString& r, Pos cap = kDefaultDecodeCap);

/// Index of the run containing `pos`, by binary search on the run ends.
std::size_t run_of_position(const RleString& r, Pos pos);

bool is_rle_bounded(const RleString& r, Occurrence occ);

/// The RLE of T[occ.start..occ.end]; boundary runs are truncated.
RleString factor_rle(const RleString& r, Occurrence occ);

RleString reverse(const RleString& r);

/// Multiplies every exponent by `factor`.
RleString scale_exponents(const RleString& r, Pos factor);

}  // namespace luf
