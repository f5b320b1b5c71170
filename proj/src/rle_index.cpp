#include "luf/rle_index.hpp"

#include <algorithm>
#include <numeric>
#include <limits>
#include <string>
#include <tuple>

namespace luf {

SuffixComparison compare_suffixes(const RleString& t, std::size_t a, Pos rem_a, std::size_t b, Pos rem_b) {
  const std::size_t m = t.runs();
  if (a == b && rem_a == rem_b) return {t.length() - (t.end(a) - rem_a), 0};
  Pos lcp = 0;
  while (true) {
    if (a > m || b > m) return {lcp, a > m ? -1 : 1};
    count_run_comparisons();
    if (t.ch(a) != t.ch(b)) return {lcp, t.ch(a) < t.ch(b) ? -1 : 1};
    if (rem_a != rem_b) {
      lcp += std::min(rem_a, rem_b);
      if (rem_a < rem_b) {
        if (a == m) return {lcp, -1};
        return {lcp, t.ch(a + 1) < t.ch(b) ? -1 : 1};
      }
      if (b == m) return {lcp, 1};
      return {lcp, t.ch(a) < t.ch(b + 1) ? -1 : 1};
    }
    lcp += rem_a;
    ++a;
    ++b;
    if (a <= m) rem_a = t.exp(a);
    if (b <= m) rem_b = t.exp(b);
  }
}

TruncatedRleIndex::TruncatedRleIndex(RleString host) : host_(std::move(host)) {
  const std::size_t m = host_.runs();
  sa_.resize(m);
  std::iota(sa_.begin(), sa_.end(), std::size_t{1});
  std::sort(sa_.begin(), sa_.end(),
            [&](std::size_t a, std::size_t b) { return compare_suffixes(host_, a, 1, b, 1).order < 0; });
  isa_.resize(m);
  for (std::size_t r = 0; r < m; ++r) isa_[sa_[r] - 1] = r + 1;

  std::vector<Pos> lcp(m, -1);
  for (std::size_t r = 1; r < m; ++r) lcp[r] = compare_suffixes(host_, sa_[r - 1], 1, sa_[r], 1).lcp;
  lcp_ = SparseTable<Pos>(std::move(lcp));
  sa_max_ = SparseTable<std::size_t, std::greater<>>(sa_);
  std::vector<Pos> prec(m);
  for (std::size_t r = 0; r < m; ++r) prec[r] = host_.exp(sa_[r]);
  prec_exp_ = SparseTable<Pos, std::greater<>>(std::move(prec));
  tracked_ = TrackedWords(2 * m);
}

Pos TruncatedRleIndex::rank_lcp(std::size_t a, std::size_t b) const {
  if (a == b) return host_.length() - host_.end(sa(a)) + 1;
  if (a > b) std::swap(a, b);
  return min_lcp(a + 1, b);
}

Pos TruncatedRleIndex::rlelcp(std::size_t i, Pos p, std::size_t j, Pos q) const {
  const std::size_t m = host_.runs();
  if (i < 1 || i > m || j < 1 || j > m) throw Error(ErrorCode::kPositionOutOfRange, "run index out of range");
  if (p < 1 || p > host_.exp(i) || q < 1 || q > host_.exp(j))
    throw Error(ErrorCode::kOffsetOutOfRange, "offset outside its run");
  count_run_comparisons();
  if (host_.ch(i) != host_.ch(j)) return 0;
  const Pos rem_i = host_.exp(i) - p + 1;
  const Pos rem_j = host_.exp(j) - q + 1;
  if (rem_i != rem_j) return std::min(rem_i, rem_j);
  if (i == j) return host_.length() - (host_.beg(i) + p - 1) + 1;
  return rem_i - 1 + rank_lcp(isa(i), isa(j));
}

int TruncatedRleIndex::compare_pattern(std::span<const Run> pattern, std::size_t run) const {
  const std::size_t m = host_.runs();
  Pos rem = 1;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    if (run > m) return 1;
    count_run_comparisons();
    const Run& pr = pattern[k];
    if (pr.ch != host_.ch(run)) return pr.ch < host_.ch(run) ? -1 : 1;
    const Pos want = k == 0 ? 1 : pr.exp;
    const bool last = k + 1 == pattern.size();
    if (last && rem >= want) return 0;
    if (!last && rem > want) return pattern[k + 1].ch < pr.ch ? -1 : 1;
    if (rem < want) {
      if (run == m) return 1;
      return pr.ch < host_.ch(run + 1) ? -1 : 1;
    }
    ++run;
    if (run <= m) rem = host_.exp(run);
  }
  return 0;
}

void TruncatedRleIndex::report(std::size_t lo, std::size_t hi, Pos first_exp, std::vector<Pos>& out) const {
  if (lo > hi) return;
  const std::size_t at = prec_exp_.query(lo - 1, hi - 1) + 1;
  if (prec_exp_.value(at - 1) < first_exp) return;
  out.push_back(host_.end(sa(at)) - first_exp + 1);
  if (at > lo) report(lo, at - 1, first_exp, out);
  report(at + 1, hi, first_exp, out);
}

std::vector<Pos> TruncatedRleIndex::find_occurrences(const RleString& pattern) const {
  std::vector<Pos> out;
  if (pattern.length() > host_.length()) return out;
  const std::span<const Run> runs = pattern.run_list();
  if (runs.size() == 1) {
    for (std::size_t i = 1; i <= host_.runs(); ++i) {
      count_run_comparisons();
      if (host_.ch(i) == runs[0].ch && host_.exp(i) >= runs[0].exp)
        for (Pos s = host_.beg(i); s + runs[0].exp - 1 <= host_.end(i); ++s) out.push_back(s);
    }
    return out;
  }
  const std::size_t m = size();
  // Ranks whose suffix has the pattern tail (first run cut to one symbol) as a prefix.
  std::size_t lo = 1, hi = m + 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (compare_pattern(runs, sa(mid)) > 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const std::size_t first = lo;
  hi = m + 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (compare_pattern(runs, sa(mid)) >= 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (first < lo) report(first, lo - 1, runs[0].exp, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::size_t, std::size_t> TruncatedRleIndex::lcp_range(std::size_t rank, Pos at_least) const {
  std::size_t lo = 1, hi = rank;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (min_lcp(mid + 1, rank) >= at_least) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t left = lo;
  lo = rank;
  hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi + 1) / 2;
    if (min_lcp(rank + 1, mid) >= at_least) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return {left, lo};
}

std::vector<Pos> TruncatedRleIndex::find_factor_occurrences(Occurrence f) const {
  const std::size_t first = run_of_position(host_, f.start);
  if (first == run_of_position(host_, f.end)) return find_occurrences(factor_rle(host_, f));
  // The factor minus all but the last symbol of its first run is a prefix of
  // the truncated suffix at `first`.
  const Pos tail = f.end - host_.end(first) + 1;
  const auto [lo, hi] = lcp_range(isa(first), tail);
  std::vector<Pos> out;
  report(lo, hi, host_.end(first) - f.start + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RleString with_window_copy(const RleString& t, std::size_t x, std::size_t y) {
  if (x < 1 || x > y || y > t.runs()) throw Error(ErrorCode::kInvalidArgument, "invalid LongestPref window");
  std::vector<Run> runs(t.run_list().begin(), t.run_list().end());
  runs.push_back({kSentinel, 1});
  for (std::size_t k = x; k <= y; ++k) runs.push_back(t.run(k));
  return RleString::from_runs(std::move(runs), true);
}

std::vector<std::size_t> window_sa(const TruncatedRleIndex& idx, std::size_t host_runs) {
  std::vector<std::size_t> out(idx.size());
  for (std::size_t r = 1; r <= idx.size(); ++r)
    out[r - 1] = idx.sa(r) >= host_runs + 2 ? idx.sa(r) : std::numeric_limits<std::size_t>::max();
  return out;
}

}  // namespace

LongestPrefIndex::LongestPrefIndex(const RleString& t, std::size_t x, std::size_t y)
    : x_(x), y_(y), host_runs_(t.runs()), index_(with_window_copy(t, x, y)) {
  window_min_sa_ = SparseTable<std::size_t>(window_sa(index_, host_runs_));
}

std::optional<std::size_t> LongestPrefIndex::query(std::size_t h, Pos limit) const {
  if (h < 1 || h > host_runs_) throw Error(ErrorCode::kInvalidArgument, "LongestPref run out of range");
  if (limit < 0) throw Error(ErrorCode::kInvalidArgument, "LongestPref limit must be non-negative");
  const std::size_t rh = index_.isa(h);
  const std::size_t total = index_.size();
  const std::size_t window_from = host_runs_ + 2;

  std::size_t r1 = rh, r2 = rh;
  if (limit != kInfinity) std::tie(r1, r2) = index_.lcp_range(rh, limit + 1);

  // Nearest window ranks outside [r1, r2].
  std::optional<std::size_t> r3, r4;
  if (r1 > 1 && index_.max_sa(1, r1 - 1) >= window_from) {
    std::size_t lo = 1, hi = r1 - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (index_.max_sa(mid, r1 - 1) >= window_from) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    r3 = lo;
  }
  if (r2 < total && index_.max_sa(r2 + 1, total) >= window_from) {
    std::size_t lo = r2 + 1, hi = total;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (index_.max_sa(r2 + 1, mid) >= window_from) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    r4 = lo;
  }
  if (!r3 && !r4) return std::nullopt;

  const Pos left_lcp = r3 ? index_.rank_lcp(*r3, rh) : -1;
  const Pos right_lcp = r4 ? index_.rank_lcp(rh, *r4) : -1;
  const Pos best = std::max(left_lcp, right_lcp);

  // Every window rank outside [r1, r2] within the lcp >= best range attains best.
  std::size_t z_run = std::numeric_limits<std::size_t>::max();
  if (left_lcp == best) {
    std::size_t a = index_.lcp_range(rh, best).first;
    z_run = std::min(z_run, window_min_sa_.value(window_min_sa_.query(a - 1, r1 - 2)));
  }
  if (right_lcp == best) {
    std::size_t b = index_.lcp_range(rh, best).second;
    z_run = std::min(z_run, window_min_sa_.value(window_min_sa_.query(r2, b - 1)));
  }
  return z_run - window_from + x_;
}

namespace {
RleString reversed_host(const RleString& t) { return reverse(t); }
}  // namespace

ReversedIndex::ReversedIndex(const RleString& t) : index_(reversed_host(t)) {}

Pos ReversedIndex::lcs(Pos a, Pos b) const {
  const RleString& rev = index_.host();
  const Pos n = rev.length();
  const Pos pa = n - a + 1;
  const Pos pb = n - b + 1;
  const std::size_t ra = run_of_position(rev, pa);
  const std::size_t rb = run_of_position(rev, pb);
  return index_.rlelcp(ra, pa - rev.beg(ra) + 1, rb, pb - rev.beg(rb) + 1);
}

}  // namespace luf
