#include "luf/candidates.hpp"

#include <algorithm>
#include <string>

#include "luf/borders.hpp"

namespace luf {

std::size_t short_limit(std::size_t m) {
  std::size_t s = 0;
  while ((s + 1) * (s + 1) <= m) ++s;
  return s;
}

std::vector<Block> block_partition(std::size_t m, std::size_t s) {
  if (m == 0 || s == 0) throw Error(ErrorCode::kInvalidArgument, "block_partition needs m, s >= 1");
  std::vector<Block> blocks;
  for (std::size_t first = 1; first <= m; first += s) blocks.push_back({first, std::min(first + s - 1, m)});
  return blocks;
}

std::size_t stage_count(std::size_t m) {
  const std::size_t s = short_limit(m);
  return (m + s - 1) / s;
}

StageGeometry stage_geometry(std::size_t m, std::size_t k) {
  const std::size_t s = short_limit(m);
  const std::size_t blocks = stage_count(m);
  if (k < 5 || k > blocks) throw Error(ErrorCode::kStageRange, "stage " + std::to_string(k) + " out of range");
  StageGeometry g;
  g.k = k;
  g.s = s;
  g.x = (k - 2) * s + 1;
  g.y = (k - 1) * s + 1;
  g.z = std::min(k * s, m);
  return g;
}

MTauSegments segments_for(const RleString& t, const StageGeometry& g, std::size_t tau) {
  if (tau < g.x || tau > g.z) throw Error(ErrorCode::kStageRange, "tau outside the stage");
  MTauSegments out;
  out.tau = tau;

  // Run tokens of F(tau, columns()) after its first symbol.
  std::vector<Run> tokens;
  tokens.reserve(2 * (g.z - g.x) + 3);
  for (std::size_t r = tau + 1; r <= g.z; ++r) tokens.push_back(t.run(r));
  tokens.push_back({kSentinel, 1});
  const std::size_t window_at = tokens.size() + 1;  // token index of run x
  for (std::size_t r = g.x; r <= g.z; ++r) tokens.push_back(t.run(r));
  const BorderTables tables = border_tables(std::span<const Run>(tokens));
  const TrackedWords scratch(2 * tokens.size() + 2 * g.s);

  const Symbol head = t.ch(tau);
  const std::size_t cols = g.columns();
  std::size_t next_id = 0;
  std::vector<std::pair<std::size_t, Pos>> found;  // (border RLE size, exponent)

  for (std::size_t j = 1; j <= cols; ++j) {
    const std::size_t last = g.y + j - 1;
    count_run_comparisons();
    if (t.ch(last) == head) {
      out.infinity_columns.push_back(j);
      continue;
    }
    // Borders of F(tau, j) with RLE size q >= 2 are head . B' . (run last)
    // where B' is a border (possibly empty) of tokens[1..prefix] of length q-2.
    const std::size_t prefix = window_at + (last - 1 - g.x);
    found.clear();
    auto test = [&](std::size_t inner) {
      const Run& before = tokens[prefix - inner - 1];
      const Run& after = tokens[inner];
      count_run_comparisons(2);
      if (before.ch != head) return;
      if (after.ch != t.ch(last) || after.exp < t.exp(last)) return;
      found.emplace_back(inner + 2, before.exp);
    };
    test(0);
    for_each_border_group(tables, prefix, [&](std::size_t longest, std::size_t second, std::size_t shortest) {
      test(longest);
      if (second != 0) test(shortest);
      return false;
    });
    std::sort(found.begin(), found.end());

    const Pos level = static_cast<Pos>(cols + 1 - j);
    Pos value = 0;
    std::size_t from = 1;
    for (const auto& [size, exponent] : found) {
      if (size > g.s) break;
      if (exponent <= value) continue;
      if (from < size)
        out.segments.push_back({static_cast<Pos>(from), static_cast<Pos>(size - 1), level, value, next_id++});
      from = size;
      value = exponent;
    }
    out.segments.push_back({static_cast<Pos>(from), static_cast<Pos>(g.s), level, value, next_id++});
  }
  out.tracked = TrackedWords(5 * out.segments.size() + out.infinity_columns.size());
  return out;
}

StageContext::StageContext(const RleString& t, const TruncatedRleIndex& global, std::size_t k, WlsqOptions options)
    : t_(t), global_(global), geom_(stage_geometry(t.runs(), k)), lp_(t, geom_.x, geom_.z) {
  const std::size_t count = geom_.z - geom_.x + 1;
  tables_.reserve(count);
  wlsq_.reserve(count);
  for (std::size_t tau = geom_.x; tau <= geom_.z; ++tau) {
    tables_.push_back(segments_for(t, geom_, tau));
    wlsq_.emplace_back(tables_.back().segments, static_cast<Pos>(geom_.s), options);
  }
}

std::optional<Occurrence> StageContext::candidate(std::size_t i) const {
  const StageGeometry& g = geom_;
  if (i < 1 || i > g.last_start())
    throw Error(ErrorCode::kStageRange, "candidate start run " + std::to_string(i) + " out of range");
  const Pos end_z = t_.end(g.z);
  const Occurrence whole{t_.beg(i), end_z};

  // Occurrence in D of the longest prefix P of T[end(i)..end(z)] found there.
  const std::size_t alpha = *lp_.query(i, kInfinity);
  auto lcp_in_d = [&](std::size_t run) {
    return std::min(global_.rlelcp(i, t_.exp(i), run, t_.exp(run)), end_z - t_.end(run) + 1);
  };
  const Pos prefix_len = lcp_in_d(alpha);
  if (prefix_len == 0) return whole;

  const std::size_t last_run = run_of_position(t_, t_.end(alpha) + prefix_len - 1);
  const std::size_t p = last_run - alpha + 1;
  if (p == 1) {
    // Only single-symbol borders are short: they need the factor to end in head's symbol.
    count_run_comparisons();
    if (t_.ch(g.z) != t_.ch(i)) return whole;
    if (g.z > g.y) return Occurrence{t_.beg(i), t_.end(g.z - 1)};
    return std::nullopt;
  }

  // P = a u b^e1.
  const Pos e1 = t_.end(alpha) + prefix_len - t_.beg(last_run);
  const Pos head_len = prefix_len - e1;
  std::size_t table = alpha;
  bool longer_b_only = false;  // every occurrence of au in D is followed by more than e1 b's
  count_run_comparisons();
  if (t_.exp(last_run) != e1) {
    const auto beta = lp_.query(alpha, prefix_len);
    if (!beta || lcp_in_d(*beta) <= head_len) {
      longer_b_only = true;
    } else {
      table = *beta;
    }
  }
  const std::size_t rows = longer_b_only ? std::min(p - 1, g.s) : std::min(p, g.s);

  const auto hit = wlsq(table).query(static_cast<Pos>(rows), 0, t_.exp(i) - 1);
  if (!hit) return std::nullopt;
  const std::size_t column = g.columns() + 1 - static_cast<std::size_t>(hit->y);
  return Occurrence{t_.beg(i), t_.end(g.y + column - 1)};
}

}  // namespace luf
