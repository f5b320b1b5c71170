#pragma once

#include <bit>
#include <cstddef>
#include <functional>
#include <vector>

#include "luf/stats.hpp"

namespace luf {

/// Sparse-table range query returning the position of the extreme value
/// under `Less` (leftmost on ties). O(N log N) build, O(1) query. Positions
/// are 0-based into the array passed at construction.
template <class T, class Less = std::less<T>>
class SparseTable {
 public:
  SparseTable() = default;
  explicit SparseTable(std::vector<T> values, Less less = Less{}) : values_(std::move(values)), less_(less) {
    const std::size_t n = values_.size();
    if (n == 0) return;
    const std::size_t levels = std::bit_width(n);
    table_.resize(levels);
    table_[0].resize(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
    for (std::size_t k = 1; k < levels; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const std::size_t count = n - (std::size_t{1} << k) + 1;
      table_[k].resize(count);
      for (std::size_t i = 0; i < count; ++i) table_[k][i] = pick(table_[k - 1][i], table_[k - 1][i + half]);
    }
    std::size_t words = n;
    for (const auto& level : table_) words += level.size();
    tracked_ = TrackedWords(words);
  }

  std::size_t size() const { return values_.size(); }
  const T& value(std::size_t i) const { return values_[i]; }

  /// Position of the extreme value in [lo, hi] (inclusive, lo <= hi).
  std::size_t query(std::size_t lo, std::size_t hi) const {
    count_rmq();
    const std::size_t k = std::bit_width(hi - lo + 1) - 1;
    return pick(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::uint32_t pick(std::uint32_t a, std::uint32_t b) const { return less_(values_[b], values_[a]) ? b : a; }

  std::vector<T> values_;
  std::vector<std::vector<std::uint32_t>> table_;
  Less less_;
  TrackedWords tracked_;
};

}  // namespace luf
