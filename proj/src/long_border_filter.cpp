#include "luf/long_border_filter.hpp"

#include <algorithm>
#include <string>

#include "luf/borders.hpp"

namespace luf {

LongBorderFilter::LongBorderFilter(const RleString& t, const TruncatedRleIndex& forward, const ReversedIndex& reversed)
    : t_(t), forward_(forward), reversed_(reversed) {}

SjRecord LongBorderFilter::compute_sj(std::size_t j, std::size_t s) const {
  if (s == 0 || j <= s || j > t_.runs())
    throw Error(ErrorCode::kInvalidArgument, "S_j needs s < j <= m, got j=" + std::to_string(j));
  SjRecord rec;
  rec.j = j;
  const Pos end_j = t_.end(j);
  const Pos window_start = t_.beg(j - s + 1);
  const PseudoPeriodResult window = longest_border(t_.run_span(j - s + 1, j));

  if (2 * window.pp + 2 > s) {
    rec.kind = SjKind::kWindow;
    rec.start = window_start;
  } else {
    // Extend the window to the left for as long as its smallest period
    // survives; the pseudo period is constant along the way.
    const Pos period = end_j - window_start + 1 - window.border_len;
    const Pos border_end = end_j - period;
    const Pos periodic_start = border_end - reversed_.lcs(end_j, border_end) + 1;
    if (periodic_start == 1) {
      rec.kind = SjKind::kSentinelPrefixed;
      return rec;
    }
    rec.kind = SjKind::kSuffix;
    rec.start = periodic_start - 1;
  }
  const Pos len = end_j - rec.start + 1;
  for (Pos start : forward_.find_factor_occurrences({rec.start, end_j})) {
    if (start + len - 1 != end_j) rec.occ_ends.push_back(start + len - 1);
  }
  return rec;
}

std::vector<Occurrence> LongBorderFilter::rm_long_bordered(const StageGeometry& g,
                                                          std::vector<Occurrence> candidates) const {
  std::vector<Occurrence> kept;
  if (candidates.empty()) return kept;
  // Grouped by end, then by start: each group C_j lists longest first.
  std::sort(candidates.begin(), candidates.end(),
            [](const Occurrence& a, const Occurrence& b) { return a.end != b.end ? a.end < b.end : a.start < b.start; });

  std::size_t at = 0;
  while (at < candidates.size()) {
    const Pos end_j = candidates[at].end;
    std::size_t group_end = at;
    while (group_end < candidates.size() && candidates[group_end].end == end_j) ++group_end;

    const std::size_t j = run_of_position(t_, end_j);
    if (j < g.y || j > g.z || t_.end(j) != end_j)
      throw Error(ErrorCode::kInvalidArgument, "candidate does not end at a run end of the stage block");
    const SjRecord sj = compute_sj(j, g.s);
    const TrackedWords sj_words(sj.occ_ends.size());

    std::size_t c = at;
    std::size_t occ = 0;
    while (c < group_end) {
      if (occ == sj.occ_ends.size()) {
        kept.push_back(candidates[c]);
        break;
      }
      const Pos zeta = sj.occ_ends[occ];
      if (zeta < candidates[c].start) {
        ++occ;
        continue;
      }
      const Pos shared = reversed_.lcs(end_j, zeta);
      if (zeta - shared + 1 > candidates[c].start) {
        ++occ;
        continue;
      }
      // T[start..zeta] is a border: drop every candidate starting by zeta.
      while (c < group_end && candidates[c].start <= zeta) ++c;
    }
    at = group_end;
  }
  return kept;
}

}  // namespace luf
