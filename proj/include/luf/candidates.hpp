#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "luf/rle_index.hpp"
#include "luf/rle_string.hpp"
#include "luf/wlsq.hpp"

namespace luf {

/// floor(sqrt(m)): the RLE size bound separating short from long borders and
/// the block size.
std::size_t short_limit(std::size_t m);

struct Block {
  std::size_t first = 0;
  std::size_t last = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// ceil(m / s) consecutive blocks of s runs; the last may be shorter.
std::vector<Block> block_partition(std::size_t m, std::size_t s);

/// Runs of stage k: D = runs x..z spans blocks k-1 and k, block k is y..z.
struct StageGeometry {
  std::size_t k = 0;
  std::size_t s = 0;
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  std::size_t columns() const { return z - y + 1; }
  /// Largest start run for which stage k computes a candidate.
  std::size_t last_start() const { return (k - 4) * s; }
};

std::size_t stage_count(std::size_t m);
StageGeometry stage_geometry(std::size_t m, std::size_t k);

/// Run-compressed columns of the table M_tau for one stage. Column j (1-based)
/// describes F(tau, j) = T[end(tau)..end(z)] $ T[beg(x)..end(y+j-1)]; row r
/// holds the largest exponent of the host run under the first symbol of the
/// suffix occurrence of any border of F with RLE size at most r (0 if none).
/// Columns whose F starts and ends with the same symbol are infinite and
/// carry no segments. Column j is drawn at height columns() + 1 - j, rows on
/// the x axis.
struct MTauSegments {
  std::size_t tau = 0;
  std::vector<WeightedSegment> segments;
  std::vector<std::size_t> infinity_columns;
  TrackedWords tracked;
};

MTauSegments segments_for(const RleString& t, const StageGeometry& g, std::size_t tau);

/// Everything stage k needs to answer candidate(i).
class StageContext {
 public:
  StageContext(const RleString& t, const TruncatedRleIndex& global, std::size_t k, WlsqOptions options = {});

  const StageGeometry& geometry() const { return geom_; }
  const LongestPrefIndex& longest_pref() const { return lp_; }
  const MTauSegments& segments(std::size_t tau) const { return tables_[tau - geom_.x]; }
  const WlsqIndex& wlsq(std::size_t tau) const { return wlsq_[tau - geom_.x]; }

  /// Longest factor starting at beg(i) and ending at a run end in block k
  /// with no short border; nullopt when every such factor has one.
  std::optional<Occurrence> candidate(std::size_t i) const;

 private:
  const RleString& t_;
  const TruncatedRleIndex& global_;
  StageGeometry geom_;
  LongestPrefIndex lp_;
  std::vector<MTauSegments> tables_;
  std::vector<WlsqIndex> wlsq_;
};

}  // namespace luf
