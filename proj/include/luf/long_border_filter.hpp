#pragma once

#include <cstddef>
#include <vector>

#include "luf/candidates.hpp"
#include "luf/rle_index.hpp"
#include "luf/rle_string.hpp"

namespace luf {

enum class SjKind {
  kWindow,            // S_j = T[beg(j-s+1)..end(j)]
  kSuffix,            // S_j = T[start..end(j)]
  kSentinelPrefixed,  // S_j = $ T[1..end(j)]; no occurrences
};

/// Marker string ending at end(j) that is a suffix of every long border of a
/// factor ending there, together with the end positions of its other
/// occurrences.
struct SjRecord {
  std::size_t j = 0;
  SjKind kind = SjKind::kWindow;
  Pos start = 0;               // unused for kSentinelPrefixed
  std::vector<Pos> occ_ends;   // ascending, excludes end(j) itself

  friend bool operator==(const SjRecord&, const SjRecord&) = default;
};

/// Removes candidates that have a long border (RLE size > s). Works on the
/// global forward index and the index of the reversed text.
class LongBorderFilter {
 public:
  LongBorderFilter(const RleString& t, const TruncatedRleIndex& forward, const ReversedIndex& reversed);

  /// Requires s < j <= m.
  SjRecord compute_sj(std::size_t j, std::size_t s) const;

  /// For every run end in the stage's block, the longest candidate ending
  /// there that has no long border. Candidates must have no short border and
  /// end at end(j) for some y <= j <= z.
  std::vector<Occurrence> rm_long_bordered(const StageGeometry& g, std::vector<Occurrence> candidates) const;

 private:
  const RleString& t_;
  const TruncatedRleIndex& forward_;
  const ReversedIndex& reversed_;
};

}  // namespace luf
