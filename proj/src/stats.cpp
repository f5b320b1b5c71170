#include "luf/stats.hpp"

#include <algorithm>

namespace luf {

namespace {
thread_local OpCounters tls_counters;
}

void OpCounters::merge(const OpCounters& other) {
  run_comparisons += other.run_comparisons;
  rmq_queries += other.rmq_queries;
  wlsq_node_visits += other.wlsq_node_visits;
  wlsq_search_steps += other.wlsq_search_steps;
  wlsq_queries += other.wlsq_queries;
  wlsq_step_bound_violations += other.wlsq_step_bound_violations;
  peak_words = std::max(peak_words, live_words + other.peak_words);
}

OpCounters& counters() { return tls_counters; }

void reset_counters() {
  const std::uint64_t live = tls_counters.live_words;
  tls_counters = OpCounters{};
  tls_counters.live_words = live;
  tls_counters.peak_words = live;
}

void TrackedWords::add(std::uint64_t words) {
  words_ += words;
  auto& c = counters();
  c.live_words += words;
  c.peak_words = std::max(c.peak_words, c.live_words);
}

void TrackedWords::release() {
  auto& c = counters();
  c.live_words -= std::min(c.live_words, words_);
  words_ = 0;
}

}  // namespace luf
