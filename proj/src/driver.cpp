#include "luf/driver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "luf/borders.hpp"
#include "luf/candidates.hpp"
#include "luf/long_border_filter.hpp"
#include "luf/rle_index.hpp"
#include "luf/stats.hpp"

namespace luf {

namespace {

LufResult unary_result() { return {1, {{1, 1}}}; }

// Tentative solution: keeps the longest length seen and its occurrences.
void merge_into(LufResult& acc, const std::vector<Occurrence>& found) {
  Pos best = 0;
  for (const auto& o : found) best = std::max(best, o.length());
  if (best == 0 || best < acc.length) return;
  if (best > acc.length) {
    acc.length = best;
    acc.occurrences.clear();
  }
  for (const auto& o : found)
    if (o.length() == best) acc.occurrences.push_back(o);
}

void normalize(LufResult& r) {
  std::sort(r.occurrences.begin(), r.occurrences.end());
  r.occurrences.erase(std::unique(r.occurrences.begin(), r.occurrences.end()), r.occurrences.end());
}

}  // namespace

LufResult longest_short_ub(const RleString& t) {
  if (t.is_unary()) return unary_result();
  const std::size_t m = t.runs();
  const std::size_t span = 4 * short_limit(m);
  LufResult result;
  std::vector<Occurrence> found;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t last = std::min(m, i + span - 1);
    const auto sizes = shortest_border_sizes(t.run_span(i, last));
    found.clear();
    for (std::size_t k = 0; k < sizes.size(); ++k)
      if (sizes[k] == 0) found.push_back({t.beg(i), t.end(i + k)});
    merge_into(result, found);
  }
  normalize(result);
  return result;
}

LufResult longest_unbordered_factors(const RleString& t, const DriverOptions& options) {
  if (t.is_unary()) return unary_result();
  LufResult result = longest_short_ub(t);
  const std::size_t m = t.runs();
  const std::size_t stages = stage_count(m);
  if (stages < 5) return result;

  const TruncatedRleIndex forward(t);
  const ReversedIndex reversed(t);
  const LongBorderFilter filter(t, forward, reversed);

  auto run_stage = [&](std::size_t k) {
    const StageContext ctx(t, forward, k, options.wlsq);
    std::vector<Occurrence> cands;
    for (std::size_t i = 1; i <= ctx.geometry().last_start(); ++i)
      if (auto c = ctx.candidate(i)) cands.push_back(*c);
    const TrackedWords held(2 * cands.size());
    return filter.rm_long_bordered(ctx.geometry(), std::move(cands));
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t k = 5; k <= stages; ++k) merge_into(result, run_stage(k));
  } else {
    // Stages are independent; per-stage outputs are merged in stage order.
    std::vector<std::vector<Occurrence>> outputs(stages + 1);
    std::atomic<std::size_t> next{5};
    std::mutex stats_mutex;
    OpCounters& caller = counters();
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        reset_counters();
        for (std::size_t k = next++; k <= stages; k = next++) outputs[k] = run_stage(k);
        std::lock_guard lock(stats_mutex);
        caller.merge(counters());
      });
    }
    for (auto& th : pool) th.join();
    for (std::size_t k = 5; k <= stages; ++k) merge_into(result, outputs[k]);
  }
  normalize(result);
  return result;
}

}  // namespace luf
