#include "luf/wlsq.hpp"

#include <algorithm>
#include <bit>

#include "luf/stats.hpp"

namespace luf {

WlsqIndex::WlsqIndex(std::span<const WeightedSegment> segments, Pos grid, WlsqOptions options)
    : grid_(grid), segment_count_(segments.size()), options_(options) {
  if (grid < 1) throw Error(ErrorCode::kInvalidArgument, "WLSQ grid must be positive");
  for (const auto& s : segments) {
    if (s.x_lo < 1 || s.x_lo > s.x_hi || s.x_hi > grid || s.y < 1 || s.y > grid)
      throw Error(ErrorCode::kPositionOutOfRange, "segment outside the WLSQ grid");
    if (s.weight < 0 || s.weight == kInfinity)
      throw Error(ErrorCode::kInvalidArgument, "segment weight out of range");
  }
  std::vector<WeightedSegment> sorted(segments.begin(), segments.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
  });
  nodes_.resize(4 * static_cast<std::size_t>(grid));
  for (const auto& s : sorted) insert(1, 1, grid, s);

  std::uint64_t words = 0;
  for (auto& node : nodes_) {
    std::vector<std::pair<Pos, std::size_t>> ys;
    ys.reserve(node.list.size());
    for (const auto& t : node.list) ys.emplace_back(t.y, t.id);
    node.min_y = SparseTable<std::pair<Pos, std::size_t>>(std::move(ys));
    words += 3 * node.list.size();
  }
  if (options_.cascade) build_cascade(1, 1, grid);
  for (const auto& node : nodes_) words += 2 * node.cascade.size();
  tracked_ = TrackedWords(words + nodes_.size());
}

void WlsqIndex::insert(std::size_t node, Pos lo, Pos hi, const WeightedSegment& s) {
  if (s.x_hi < lo || hi < s.x_lo) return;
  if (s.x_lo <= lo && hi <= s.x_hi) {
    nodes_[node].list.push_back({s.weight, s.y, s.id});
    return;
  }
  const Pos mid = lo + (hi - lo) / 2;
  insert(2 * node, lo, mid, s);
  insert(2 * node + 1, mid + 1, hi, s);
}

void WlsqIndex::build_cascade(std::size_t node, Pos lo, Pos hi) {
  Node& u = nodes_[node];
  std::vector<Pos> keys;
  keys.reserve(u.list.size());
  for (const auto& t : u.list) keys.push_back(t.w);

  const bool leaf = lo == hi;
  std::vector<Bridge>* left = nullptr;
  std::vector<Bridge>* right = nullptr;
  if (!leaf) {
    const Pos mid = lo + (hi - lo) / 2;
    build_cascade(2 * node, lo, mid);
    build_cascade(2 * node + 1, mid + 1, hi);
    left = &nodes_[2 * node].cascade;
    right = &nodes_[2 * node + 1].cascade;
    // Every second entry of each child's cascade list (sentinels excluded).
    for (auto* child : {left, right})
      for (std::size_t k = 1; k + 1 < child->size(); k += 2) keys.push_back((*child)[k].key);
    std::sort(keys.begin(), keys.end());
  }
  // Distinct keys keep the walk back from a bridge to at most one entry.
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  u.cascade.clear();
  u.cascade.reserve(keys.size() + 1);
  std::size_t own = 0, li = 0, ri = 0;
  auto lower = [](const std::vector<Bridge>& list, std::size_t& at, Pos key) {
    while (at + 1 < list.size() && list[at].key < key) ++at;
    return static_cast<std::uint32_t>(at);
  };
  for (Pos key : keys) {
    while (own < u.list.size() && u.list[own].w < key) ++own;
    Bridge b{key, static_cast<std::uint32_t>(own), 0, 0};
    if (!leaf) {
      b.left = lower(*left, li, key);
      b.right = lower(*right, ri, key);
    }
    u.cascade.push_back(b);
  }
  Bridge sentinel{kInfinity, static_cast<std::uint32_t>(u.list.size()), 0, 0};
  if (!leaf) {
    sentinel.left = static_cast<std::uint32_t>(left->size() - 1);
    sentinel.right = static_cast<std::uint32_t>(right->size() - 1);
  }
  u.cascade.push_back(sentinel);
}

std::size_t WlsqIndex::own_lower_bound(const Node& node, Pos key) const {
  std::size_t lo = 0, hi = node.list.size();
  while (lo < hi) {
    ++counters().wlsq_search_steps;
    std::size_t mid = (lo + hi) / 2;
    if (node.list[mid].w < key) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<WlsqHit> WlsqIndex::query(Pos v, Pos w1, Pos w2) const {
  if (v < 1 || v > grid_ || w1 > w2 || w2 < 0) return std::nullopt;
  w1 = std::max<Pos>(w1, 0);
  const Pos hi_key = w2 >= kInfinity - 1 ? kInfinity - 1 : w2 + 1;
  auto& stats = counters();
  ++stats.wlsq_queries;
  const std::uint64_t steps_before = stats.wlsq_search_steps;

  std::optional<std::pair<Pos, std::size_t>> best;
  auto consider = [&](const Node& node, std::size_t from, std::size_t to) {
    if (from >= to) return;
    auto cand = node.min_y.value(node.min_y.query(from, to - 1));
    if (!best || cand < *best) best = cand;
  };

  std::size_t node = 1;
  Pos lo = 1, hi = grid_;
  std::size_t p1 = 0, p2 = 0;
  if (options_.cascade) {
    const auto& root = nodes_[1].cascade;
    auto search = [&](Pos key) {
      std::size_t a = 0, b = root.size() - 1;
      while (a < b) {
        ++stats.wlsq_search_steps;
        std::size_t mid = (a + b) / 2;
        if (root[mid].key < key) {
          a = mid + 1;
        } else {
          b = mid;
        }
      }
      return a;
    };
    // A lower bound at or below every key needs no search.
    ++stats.wlsq_search_steps;
    p1 = root.front().key >= w1 ? 0 : search(w1);
    p2 = search(hi_key);
  }

  while (true) {
    ++stats.wlsq_node_visits;
    const Node& u = nodes_[node];
    if (options_.cascade) {
      consider(u, u.cascade[p1].own, u.cascade[p2].own);
    } else {
      consider(u, own_lower_bound(u, w1), own_lower_bound(u, hi_key));
    }
    if (lo == hi) break;
    const Pos mid = lo + (hi - lo) / 2;
    const bool go_left = v <= mid;
    const std::size_t child = go_left ? 2 * node : 2 * node + 1;
    if (options_.cascade) {
      const auto& list = nodes_[child].cascade;
      auto descend = [&](std::size_t p, Pos key) {
        std::size_t q = go_left ? u.cascade[p].left : u.cascade[p].right;
        while (q > 0 && list[q - 1].key >= key) {
          ++stats.wlsq_search_steps;
          --q;
        }
        return q;
      };
      p1 = descend(p1, w1);
      p2 = descend(p2, hi_key);
    }
    node = child;
    if (go_left) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (options_.cascade) {
    const auto ceil_log2 = [](std::uint64_t v) { return v <= 1 ? 0 : static_cast<std::uint64_t>(std::bit_width(v - 1)); };
    const std::uint64_t bound = ceil_log2(segment_count_) + 4 * ceil_log2(static_cast<std::uint64_t>(grid_));
    if (stats.wlsq_search_steps - steps_before > bound) ++stats.wlsq_step_bound_violations;
  }
  if (!best) return std::nullopt;
  return WlsqHit{best->second, best->first};
}

}  // namespace luf
