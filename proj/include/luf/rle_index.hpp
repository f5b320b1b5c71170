#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "luf/rle_string.hpp"
#include "luf/rmq.hpp"

namespace luf {

/// Truncated RLE suffix array over the m suffixes T[end(x)..n], with its
/// inverse, adjacent lcp array and range-min/max support. Ranks are 1-based.
class TruncatedRleIndex {
 public:
  explicit TruncatedRleIndex(RleString host);

  const RleString& host() const { return host_; }
  std::size_t size() const { return sa_.size(); }

  std::size_t sa(std::size_t rank) const { return sa_[rank - 1]; }
  std::size_t isa(std::size_t run) const { return isa_[run - 1]; }
  /// lcp(T<rank>, T<rank-1>); -1 for rank 1.
  Pos lcp(std::size_t rank) const { return lcp_.value(rank - 1); }

  /// Minimum lcp over ranks lo..hi (1-based, lo <= hi).
  Pos min_lcp(std::size_t lo, std::size_t hi) const { return lcp_.value(lcp_.query(lo - 1, hi - 1)); }
  /// lcp of the truncated suffixes at ranks a and b.
  Pos rank_lcp(std::size_t a, std::size_t b) const;
  /// Largest run index among ranks lo..hi.
  std::size_t max_sa(std::size_t lo, std::size_t hi) const { return sa_[sa_max_.query(lo - 1, hi - 1)]; }

  /// lcp of T[beg(i)+p-1..n] and T[beg(j)+q-1..n], in O(1).
  Pos rlelcp(std::size_t i, Pos p, std::size_t j, Pos q) const;

  /// Maximal rank range around `rank` whose suffixes share at least
  /// `at_least` characters with T<rank>.
  std::pair<std::size_t, std::size_t> lcp_range(std::size_t rank, Pos at_least) const;

  /// Start positions of every occurrence of `pattern` in the host, ascending.
  std::vector<Pos> find_occurrences(const RleString& pattern) const;

  /// Start positions of every occurrence of the host factor T[f.start..f.end].
  /// Uses the suffix-array range of the factor's own occurrence, so the cost
  /// does not depend on the factor's run count.
  std::vector<Pos> find_factor_occurrences(Occurrence f) const;

 private:
  int compare_pattern(std::span<const Run> pattern, std::size_t run) const;
  void report(std::size_t lo, std::size_t hi, Pos first_exp, std::vector<Pos>& out) const;

  RleString host_;
  std::vector<std::size_t> sa_;
  std::vector<std::size_t> isa_;
  SparseTable<Pos> lcp_;
  SparseTable<std::size_t, std::greater<>> sa_max_;
  SparseTable<Pos, std::greater<>> prec_exp_;  // exp(sa[r]) per rank
  TrackedWords tracked_;
};

/// lcp / compare of two suffixes given as (run, chars remaining in that run).
struct SuffixComparison {
  Pos lcp = 0;
  int order = 0;  // <0, 0 (identical), >0
};
SuffixComparison compare_suffixes(const RleString& t, std::size_t run_a, Pos rem_a, std::size_t run_b, Pos rem_b);

inline TruncatedRleIndex build_index(const RleString& r) { return TruncatedRleIndex(r); }

/// Supports LongestPref(x, y, h, l): among x <= z <= y, the run z maximising
/// lcp(T[end(h)..n], T[end(z)..end(y)]) subject to that lcp being at most l.
/// Ties go to the smallest z. Built over T $ T[beg(x)..end(y)].
class LongestPrefIndex {
 public:
  LongestPrefIndex(const RleString& t, std::size_t x, std::size_t y);

  std::size_t x() const { return x_; }
  std::size_t y() const { return y_; }
  const TruncatedRleIndex& index() const { return index_; }

  /// `limit` may be kInfinity. h may be any run of T.
  std::optional<std::size_t> query(std::size_t h, Pos limit) const;

 private:
  std::size_t x_;
  std::size_t y_;
  std::size_t host_runs_;
  TruncatedRleIndex index_;
  SparseTable<std::size_t> window_min_sa_;  // sa for window ranks, else max
};

inline LongestPrefIndex build_longest_pref(const RleString& t, std::size_t x, std::size_t y) {
  return LongestPrefIndex(t, x, y);
}

/// Longest common suffix queries on T through the index of its reversal.
class ReversedIndex {
 public:
  explicit ReversedIndex(const RleString& t);

  /// Length of the longest common suffix of T[1..a] and T[1..b].
  Pos lcs(Pos a, Pos b) const;
  const TruncatedRleIndex& index() const { return index_; }

 private:
  TruncatedRleIndex index_;
};

inline ReversedIndex build_reversed_index(const RleString& t) { return ReversedIndex(t); }

}  // namespace luf
