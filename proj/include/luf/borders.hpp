#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "luf/rle_string.hpp"
#include "luf/stats.hpp"
#include "luf/types.hpp"

namespace luf {

/// Border and border-group arrays indexed by prefix length; slot 0 is unused
/// and holds 0.
struct BorderTables {
  std::vector<std::size_t> bord;
  std::vector<std::size_t> bg;
  TrackedWords tracked;
};

/// KMP failure function plus border groups (borders sharing the prefix's
/// smallest period). Symbols are compared with operator==.
template <class T>
BorderTables border_tables(std::span<const T> seq) {
  const std::size_t len = seq.size();
  BorderTables t;
  t.bord.assign(len + 1, 0);
  t.bg.assign(len + 1, 0);
  t.tracked = TrackedWords(2 * (len + 1));
  std::size_t k = 0;
  for (std::size_t i = 2; i <= len; ++i) {
    while (true) {
      count_run_comparisons();
      if (seq[k] == seq[i - 1]) {
        ++k;
        break;
      }
      if (k == 0) break;
      k = t.bord[k];
    }
    t.bord[i] = k;
  }
  for (std::size_t i = 1; i <= len; ++i) {
    std::size_t b = t.bord[i];
    t.bg[i] = (b > 0 && b - t.bord[b] == i - b) ? t.bg[b] : i;
  }
  return t;
}

/// bord[k] = length of the longest border of the prefix of length k+1.
template <class T>
std::vector<std::size_t> border_array(std::span<const T> seq) {
  if (seq.empty()) throw Error(ErrorCode::kEmptyInput, "border_array of empty sequence");
  auto t = border_tables(seq);
  return {t.bord.begin() + 1, t.bord.end()};
}

/// bg[k] = shortest border of the prefix of length k+1 whose smallest period
/// equals the prefix's, or k+1 if there is none.
template <class T>
std::vector<std::size_t> border_group_array(std::span<const T> seq) {
  if (seq.empty()) throw Error(ErrorCode::kEmptyInput, "border_group_array of empty sequence");
  auto t = border_tables(seq);
  return {t.bg.begin() + 1, t.bg.end()};
}

/// Shortest-border RLE sizes of every run-end prefix of a run sequence whose
/// first run is complete: out[i-1] is the RLE size of the shortest border of
/// runs 1..i, or 0 when that prefix is unbordered.
std::vector<std::size_t> shortest_border_sizes(std::span<const Run> runs);

/// RLE shortest border array of the whole string.
std::vector<std::size_t> rsbord(const RleString& r);

struct PseudoPeriodResult {
  std::size_t pp = 0;          // r(w) - r(longest border)
  Pos border_len = 0;          // 0 when unbordered
  std::size_t border_rle = 0;  // RLE size of the longest border
};

/// Longest border of the string whose runs are given (boundary runs may be
/// truncated runs of a host string).
PseudoPeriodResult longest_border(std::span<const Run> runs);

PseudoPeriodResult window_longest_border(const RleString& r, Occurrence occ);

/// Walks the border groups of prefix `len` of `tables`, longest group first.
/// For every group calls visit(longest, second, shortest) where `second` is
/// the next shorter member (0 if the group has one member); all members below
/// the longest share the same following and preceding symbols. Stops early when
/// visit returns true.
template <class Visit>
void for_each_border_group(const BorderTables& tables, std::size_t len, Visit&& visit) {
  std::size_t b = tables.bord[len];
  while (b > 0) {
    std::size_t shortest = tables.bg[b];
    std::size_t second = shortest == b ? 0 : tables.bord[b];
    if (visit(b, second, shortest)) return;
    b = tables.bord[shortest];
  }
}

}  // namespace luf
