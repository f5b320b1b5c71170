#include "luf/oracles.hpp"

#include <algorithm>
#include <string>

namespace luf::oracle {

namespace {

bool is_border(std::span<const Symbol> w, std::size_t len) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len), w.end() - static_cast<std::ptrdiff_t>(len));
}

std::span<const Symbol> slice(const Text& t, Pos from, Pos to) {
  return std::span<const Symbol>(t).subspan(static_cast<std::size_t>(from - 1), static_cast<std::size_t>(to - from + 1));
}

}  // namespace

std::size_t rle_size(std::span<const Symbol> w) {
  std::size_t r = 0;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (k == 0 || w[k] != w[k - 1]) ++r;
  return r;
}

bool is_unary(std::span<const Symbol> w) { return rle_size(w) == 1; }

Pos longest_border(std::span<const Symbol> w) {
  for (std::size_t len = w.size(); len-- > 1;)
    if (is_border(w, len)) return static_cast<Pos>(len);
  return 0;
}

Pos naive_shortest_border(std::span<const Symbol> w) {
  for (std::size_t len = 1; len < w.size(); ++len)
    if (is_border(w, len)) return static_cast<Pos>(len);
  return 0;
}

bool naive_is_unbordered(std::span<const Symbol> w) { return naive_shortest_border(w) == 0; }

Pos smallest_period(std::span<const Symbol> w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    bool ok = true;
    for (std::size_t k = 0; k + p < w.size() && ok; ++k) ok = w[k] == w[k + p];
    if (ok) return static_cast<Pos>(p);
  }
  return static_cast<Pos>(w.size());
}

std::vector<std::size_t> naive_border_array(std::span<const Symbol> w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= w.size(); ++i) out.push_back(static_cast<std::size_t>(longest_border(w.first(i))));
  return out;
}

std::vector<std::size_t> naive_border_group_array(std::span<const Symbol> w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const auto prefix = w.first(i);
    const Pos period = smallest_period(prefix);
    std::size_t value = i;
    for (std::size_t len = 1; len < i; ++len) {
      if (is_border(prefix, len) && smallest_period(prefix.first(len)) == period) {
        value = len;
        break;
      }
    }
    out.push_back(value);
  }
  return out;
}

std::size_t naive_pp(std::span<const Symbol> w) {
  const Pos b = longest_border(w);
  return rle_size(w) - (b == 0 ? 0 : rle_size(w.first(static_cast<std::size_t>(b))));
}

RunBounds run_bounds(const Text& t) {
  RunBounds rb;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k == 0 || t[k] != t[k - 1]) {
      if (k > 0) rb.end.push_back(static_cast<Pos>(k));
      rb.beg.push_back(static_cast<Pos>(k + 1));
    }
  }
  if (!t.empty()) rb.end.push_back(static_cast<Pos>(t.size()));
  return rb;
}

std::vector<std::size_t> naive_rsbord(const Text& t) {
  const RunBounds rb = run_bounds(t);
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= rb.runs(); ++i) {
    const auto prefix = slice(t, 1, rb.end[i - 1]);
    const Pos b = naive_shortest_border(prefix);
    out.push_back(b == 0 ? 0 : rle_size(prefix.first(static_cast<std::size_t>(b))));
  }
  return out;
}

LufResult naive_luf(const Text& t, const OracleBudget& budget) {
  const Pos n = static_cast<Pos>(t.size());
  if (n == 0) throw Error(ErrorCode::kEmptyInput, "empty input");
  if (n > budget.max_n)
    throw Error(ErrorCode::kBudgetExceeded, "naive oracle limited to " + std::to_string(budget.max_n) + " symbols");
  if (is_unary(t)) return {1, {{1, 1}}};

  LufResult best;
  std::vector<std::size_t> fail(t.size() + 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    // Border array of t[i..n).
    const Symbol* w = t.data() + i;
    const std::size_t len = t.size() - i;
    if (static_cast<Pos>(len) < best.length) break;
    fail[1] = 0;
    std::size_t k = 0;
    for (std::size_t q = 2; q <= len; ++q) {
      while (k > 0 && w[k] != w[q - 1]) k = fail[k];
      if (w[k] == w[q - 1]) ++k;
      fail[q] = k;
    }
    for (std::size_t q = len; q >= 1 && static_cast<Pos>(q) >= best.length; --q) {
      if (fail[q] != 0) continue;
      const Occurrence occ{static_cast<Pos>(i + 1), static_cast<Pos>(i + q)};
      if (static_cast<Pos>(q) > best.length) {
        best.length = static_cast<Pos>(q);
        best.occurrences.clear();
      }
      best.occurrences.push_back(occ);
      break;
    }
  }
  return best;
}

Pos naive_lcp(const Text& t, Pos a, Pos b) {
  Pos k = 0;
  const Pos n = static_cast<Pos>(t.size());
  while (a + k <= n && b + k <= n && t[a + k - 1] == t[b + k - 1]) ++k;
  return k;
}

Pos naive_lcs(const Text& t, Pos a, Pos b) {
  Pos k = 0;
  while (a - k >= 1 && b - k >= 1 && t[a - k - 1] == t[b - k - 1]) ++k;
  return k;
}

std::vector<Pos> naive_occurrences(const Text& t, std::span<const Symbol> pattern) {
  std::vector<Pos> out;
  if (pattern.empty() || pattern.size() > t.size()) return out;
  for (std::size_t s = 0; s + pattern.size() <= t.size(); ++s)
    if (std::equal(pattern.begin(), pattern.end(), t.begin() + static_cast<std::ptrdiff_t>(s)))
      out.push_back(static_cast<Pos>(s + 1));
  return out;
}

std::optional<std::size_t> naive_longest_pref(const Text& t, std::size_t x, std::size_t y, std::size_t h,
                                              Pos limit) {
  const RunBounds rb = run_bounds(t);
  std::optional<std::size_t> best;
  Pos best_lcp = -1;
  const Pos cap_end = rb.end[y - 1];
  for (std::size_t z = x; z <= y; ++z) {
    Pos lcp = std::min(naive_lcp(t, rb.end[h - 1], rb.end[z - 1]), cap_end - rb.end[z - 1] + 1);
    if (lcp > limit) continue;
    if (lcp > best_lcp) {
      best_lcp = lcp;
      best = z;
    }
  }
  return best;
}

std::vector<std::vector<Pos>> naive_m_table(const Text& t, std::size_t x, std::size_t y, std::size_t z,
                                            std::size_t s, std::size_t tau) {
  const RunBounds rb = run_bounds(t);
  const std::size_t cols = z - y + 1;
  std::vector<std::vector<Pos>> m(s, std::vector<Pos>(cols, 0));
  for (std::size_t j = 1; j <= cols; ++j) {
    Text f(t.begin() + (rb.end[tau - 1] - 1), t.begin() + rb.end[z - 1]);
    f.push_back(kSentinel);
    f.insert(f.end(), t.begin() + (rb.beg[x - 1] - 1), t.begin() + rb.end[y + j - 2]);
    if (f.front() == f.back()) {
      for (auto& row : m) row[j - 1] = kInfinity;
      continue;
    }
    const RunBounds frb = run_bounds(f);
    for (std::size_t len = 1; len < f.size(); ++len) {
      if (!is_border(f, len)) continue;
      const std::size_t size = rle_size(std::span<const Symbol>(f).first(len));
      const Pos suffix_start = static_cast<Pos>(f.size() - len + 1);
      std::size_t run = 0;
      while (frb.end[run] < suffix_start) ++run;
      const Pos exponent = frb.end[run] - frb.beg[run] + 1;
      for (std::size_t r = size; r <= s; ++r) m[r - 1][j - 1] = std::max(m[r - 1][j - 1], exponent);
    }
  }
  return m;
}

std::optional<Occurrence> naive_candidate(const Text& t, std::size_t y, std::size_t z, std::size_t s,
                                          std::size_t i) {
  const RunBounds rb = run_bounds(t);
  for (std::size_t last = z; last >= y; --last) {
    const auto f = slice(t, rb.beg[i - 1], rb.end[last - 1]);
    bool short_border = false;
    for (std::size_t len = 1; len < f.size() && !short_border; ++len)
      short_border = is_border(f, len) && rle_size(f.first(len)) <= s;
    if (!short_border) return Occurrence{rb.beg[i - 1], rb.end[last - 1]};
  }
  return std::nullopt;
}

NaiveSj naive_sj(const Text& t, std::size_t j, std::size_t s) {
  const RunBounds rb = run_bounds(t);
  const Pos end_j = rb.end[j - 1];
  Text u{kSentinel};
  u.insert(u.end(), t.begin(), t.begin() + end_j);
  // Shortest suffix of $T[1..end(j)] whose pseudo period exceeds s/2 - 1.
  std::size_t shortest = u.size();
  for (std::size_t len = 1; len <= u.size(); ++len) {
    const auto suffix = std::span<const Symbol>(u).last(len);
    if (2 * naive_pp(suffix) + 2 > s) {
      shortest = len;
      break;
    }
  }
  const Pos window_len = end_j - rb.beg[j - s] + 1;
  NaiveSj out;
  if (window_len >= static_cast<Pos>(shortest)) {
    out.window = true;
    out.start = rb.beg[j - s];
  } else if (shortest == u.size()) {
    out.sentinel_prefixed = true;
    return out;
  } else {
    out.start = end_j - static_cast<Pos>(shortest) + 1;
  }
  const auto pattern = slice(t, out.start, end_j);
  for (Pos start : naive_occurrences(t, pattern)) {
    const Pos e = start + static_cast<Pos>(pattern.size()) - 1;
    if (e != end_j) out.occ_ends.push_back(e);
  }
  return out;
}

std::optional<WlsqHit> naive_wlsq(std::span<const WeightedSegment> segments, Pos v, Pos w1, Pos w2) {
  std::optional<WlsqHit> best;
  for (const auto& s : segments) {
    if (s.x_lo > v || v > s.x_hi || s.weight < w1 || s.weight > w2) continue;
    if (!best || s.y < best->y || (s.y == best->y && s.id < best->id)) best = WlsqHit{s.id, s.y};
  }
  return best;
}

}  // namespace luf::oracle
