#pragma once

#include <cstdint>

namespace luf {

/// Operation counters for the compute path. Counting is per thread; the
/// driver collects worker counters into the caller's totals.
struct OpCounters {
  std::uint64_t run_comparisons = 0;   // run-token / symbol comparisons
  std::uint64_t rmq_queries = 0;
  std::uint64_t wlsq_node_visits = 0;
  std::uint64_t wlsq_search_steps = 0; // binary-search and cascade walk steps
  std::uint64_t wlsq_queries = 0;
  // Queries whose search steps exceeded ceil(log2 |S|) + 4 ceil(log2 N).
  std::uint64_t wlsq_step_bound_violations = 0;
  std::uint64_t live_words = 0;        // auxiliary words currently held
  std::uint64_t peak_words = 0;

  std::uint64_t total_ops() const {
    return run_comparisons + rmq_queries + wlsq_node_visits + wlsq_search_steps;
  }
  void merge(const OpCounters& other);
};

OpCounters& counters();
/// Zeroes the operation counts; memory held right now stays live and becomes
/// the new peak baseline.
void reset_counters();

inline void count_run_comparisons(std::uint64_t k = 1) { counters().run_comparisons += k; }
inline void count_rmq() { ++counters().rmq_queries; }

/// Accounts `words` machine words of auxiliary memory for its lifetime.
class TrackedWords {
 public:
  TrackedWords() = default;
  explicit TrackedWords(std::uint64_t words) { add(words); }
  TrackedWords(const TrackedWords& other) { add(other.words_); }
  TrackedWords(TrackedWords&& other) noexcept : words_(other.words_) { other.words_ = 0; }
  TrackedWords& operator=(TrackedWords other) noexcept {
    std::uint64_t tmp = words_;
    words_ = other.words_;
    other.words_ = tmp;
    return *this;
  }
  ~TrackedWords() { release(); }

  void add(std::uint64_t words);
  std::uint64_t words() const { return words_; }

 private:
  void release();
  std::uint64_t words_ = 0;
};

}  // namespace luf
