#include "luf/borders.hpp"

#include <optional>

namespace luf {

namespace {

// Runs 1..r of w with inner string w' = runs 2..r-1. An inner border of
// length L of w'[1..inner_len] extends to a border of w (ending at run r =
// inner_len + 2) iff the run after its prefix occurrence can host w's last
// run and the run before its suffix occurrence can host w's first run.
bool inner_border_extends(std::span<const Run> w, std::size_t inner_len, std::size_t border) {
  const Run& first = w[0];
  const Run& last = w[inner_len + 1];
  const Run& after_prefix = w[border + 1];
  const Run& before_suffix = w[inner_len - border];
  count_run_comparisons(2);
  return after_prefix.ch == last.ch && after_prefix.exp >= last.exp && before_suffix.ch == first.ch &&
         before_suffix.exp >= first.exp;
}

bool size_two_border(std::span<const Run> w, std::size_t r) {
  if (r < 3) return false;
  count_run_comparisons(2);
  return w[r - 2].ch == w[0].ch && w[r - 2].exp >= w[0].exp && w[1].ch == w[r - 1].ch &&
         w[1].exp >= w[r - 1].exp;
}

}  // namespace

std::vector<std::size_t> shortest_border_sizes(std::span<const Run> runs) {
  const std::size_t m = runs.size();
  std::vector<std::size_t> out(m, 0);
  const TrackedWords scratch(m);
  if (m == 0) return out;
  out[0] = runs[0].exp >= 2 ? 1 : 0;
  if (m < 2) return out;

  std::span<const Run> inner = m > 2 ? runs.subspan(1, m - 2) : std::span<const Run>{};
  BorderTables tables = border_tables(inner);

  for (std::size_t i = 2; i <= m; ++i) {
    count_run_comparisons();
    if (runs[i - 1].ch == runs[0].ch) {
      out[i - 1] = 1;
      continue;
    }
    if (size_two_border(runs, i)) {
      out[i - 1] = 2;
      continue;
    }
    if (i < 4) continue;
    const std::size_t inner_len = i - 2;
    std::span<const Run> w = runs.first(i);
    std::optional<std::size_t> best;
    for_each_border_group(tables, inner_len, [&](std::size_t longest, std::size_t second, std::size_t shortest) {
      if (second != 0 && inner_border_extends(w, inner_len, shortest)) {
        best = shortest;
      } else if (inner_border_extends(w, inner_len, longest)) {
        best = longest;
      }
      return false;
    });
    if (best) out[i - 1] = *best + 2;
  }
  return out;
}

std::vector<std::size_t> rsbord(const RleString& r) { return shortest_border_sizes(r.run_list()); }

PseudoPeriodResult longest_border(std::span<const Run> runs) {
  const std::size_t r = runs.size();
  PseudoPeriodResult res;
  if (r == 0) return res;
  if (r == 1) {
    if (runs[0].exp >= 2) {
      res.border_len = runs[0].exp - 1;
      res.border_rle = 1;
    }
    res.pp = 1 - res.border_rle;
    return res;
  }

  auto total_length = [&](std::size_t first, std::size_t count) {
    Pos len = 0;
    for (std::size_t k = first; k < first + count; ++k) len += runs[k].exp;
    return len;
  };

  if (r >= 4) {
    const std::size_t inner_len = r - 2;
    BorderTables tables = border_tables(runs.subspan(1, inner_len));
    std::optional<std::size_t> found;
    for_each_border_group(tables, inner_len, [&](std::size_t longest, std::size_t second, std::size_t) {
      if (inner_border_extends(runs, inner_len, longest)) {
        found = longest;
        return true;
      }
      if (second != 0 && inner_border_extends(runs, inner_len, second)) {
        found = second;
        return true;
      }
      return false;
    });
    if (found) {
      res.border_rle = *found + 2;
      res.border_len = runs[0].exp + total_length(1, *found) + runs[r - 1].exp;
      res.pp = r - res.border_rle;
      return res;
    }
  }
  if (size_two_border(runs, r)) {
    res.border_rle = 2;
    res.border_len = runs[0].exp + runs[r - 1].exp;
  } else {
    count_run_comparisons();
    if (runs[0].ch == runs[r - 1].ch) {
      res.border_rle = 1;
      res.border_len = std::min(runs[0].exp, runs[r - 1].exp);
    }
  }
  res.pp = r - res.border_rle;
  return res;
}

PseudoPeriodResult window_longest_border(const RleString& r, Occurrence occ) {
  return longest_border(factor_rle(r, occ).run_list());
}

}  // namespace luf
