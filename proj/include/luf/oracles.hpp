#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "luf/types.hpp"
#include "luf/wlsq.hpp"

/// Character-level brute-force references. Nothing here calls into the
/// compressed implementation; every quantity is recomputed from its
/// definition on the decoded text. Positions and run indices are 1-based.
namespace luf::oracle {

using Text = std::vector<Symbol>;

struct OracleBudget {
  Pos max_n = Pos{1} << 20;
  std::uint64_t rng_seed = 0;
};

std::size_t rle_size(std::span<const Symbol> w);
bool is_unary(std::span<const Symbol> w);

/// Length of the longest / shortest border, 0 if unbordered.
Pos longest_border(std::span<const Symbol> w);
Pos naive_shortest_border(std::span<const Symbol> w);
bool naive_is_unbordered(std::span<const Symbol> w);
Pos smallest_period(std::span<const Symbol> w);

std::vector<std::size_t> naive_border_array(std::span<const Symbol> w);
std::vector<std::size_t> naive_border_group_array(std::span<const Symbol> w);

/// r(w) minus the RLE size of the longest border.
std::size_t naive_pp(std::span<const Symbol> w);

std::vector<std::size_t> naive_rsbord(const Text& t);

LufResult naive_luf(const Text& t, const OracleBudget& budget = {});

Pos naive_lcp(const Text& t, Pos a, Pos b);
Pos naive_lcs(const Text& t, Pos a, Pos b);
std::vector<Pos> naive_occurrences(const Text& t, std::span<const Symbol> pattern);

/// Run boundaries of t.
struct RunBounds {
  std::vector<Pos> beg;  // beg[i-1] for run i
  std::vector<Pos> end;
  std::size_t runs() const { return beg.size(); }
};
RunBounds run_bounds(const Text& t);

std::optional<std::size_t> naive_longest_pref(const Text& t, std::size_t x, std::size_t y, std::size_t h, Pos limit);

/// Full M_tau table, indexed [r-1][j-1]; kInfinity marks infinite columns.
std::vector<std::vector<Pos>> naive_m_table(const Text& t, std::size_t x, std::size_t y, std::size_t z,
                                            std::size_t s, std::size_t tau);

/// Longest factor T[beg(i)..end(j')] with y <= j' <= z and no border of RLE
/// size <= s.
std::optional<Occurrence> naive_candidate(const Text& t, std::size_t y, std::size_t z, std::size_t s, std::size_t i);

struct NaiveSj {
  bool sentinel_prefixed = false;
  bool window = false;
  Pos start = 0;
  std::vector<Pos> occ_ends;
};
NaiveSj naive_sj(const Text& t, std::size_t j, std::size_t s);

std::optional<WlsqHit> naive_wlsq(std::span<const WeightedSegment> segments, Pos v, Pos w1, Pos w2);

}  // namespace luf::oracle
