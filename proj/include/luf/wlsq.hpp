#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "luf/rmq.hpp"
#include "luf/types.hpp"

namespace luf {

/// Horizontal segment [x_lo, x_hi] at height y on an N x N grid.
struct WeightedSegment {
  Pos x_lo = 0;
  Pos x_hi = 0;
  Pos y = 0;
  Pos weight = 0;
  std::size_t id = 0;
};

struct WlsqHit {
  std::size_t id = 0;
  Pos y = 0;
  friend bool operator==(const WlsqHit&, const WlsqHit&) = default;
};

struct WlsqOptions {
  bool cascade = true;  // false: independent binary search in every node
};

/// Weighted lowest stabbing queries: the lowest segment crossing x = v whose
/// weight lies in [w1, w2]; ties on y go to the smaller id.
///
/// Segment tree over the x range. Each node keeps its segments sorted by
/// weight with a range-min over (y, id). Node lists are linked by fractional
/// cascading on the weight key, so a query does one binary search at the root
/// and O(1) work per further node.
class WlsqIndex {
 public:
  WlsqIndex() = default;
  WlsqIndex(std::span<const WeightedSegment> segments, Pos grid, WlsqOptions options = {});

  std::optional<WlsqHit> query(Pos v, Pos w1, Pos w2) const;

  std::size_t segment_count() const { return segment_count_; }
  Pos grid() const { return grid_; }

 private:
  struct Tuple {
    Pos w;
    Pos y;
    std::size_t id;
  };
  struct Bridge {
    Pos key;
    std::uint32_t own;    // lower bound of key in the node's own list
    std::uint32_t left;   // lower bound of key in the left child's cascade list
    std::uint32_t right;  // same for the right child
  };
  struct Node {
    std::vector<Tuple> list;
    SparseTable<std::pair<Pos, std::size_t>> min_y;
    std::vector<Bridge> cascade;  // ends with a +infinity sentinel
  };

  void insert(std::size_t node, Pos lo, Pos hi, const WeightedSegment& s);
  void build_cascade(std::size_t node, Pos lo, Pos hi);
  std::size_t own_lower_bound(const Node& node, Pos key) const;

  Pos grid_ = 0;
  std::size_t segment_count_ = 0;
  WlsqOptions options_;
  std::vector<Node> nodes_;
  TrackedWords tracked_;
};

inline WlsqIndex wlsq_build(std::span<const WeightedSegment> segments, Pos grid, WlsqOptions options = {}) {
  return WlsqIndex(segments, grid, options);
}

}  // namespace luf
