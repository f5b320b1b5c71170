#include "luf/luf.h"

#include <chrono>
#include <exception>
#include <new>
#include <string>
#include <utility>

#include "luf/driver.hpp"
#include "luf/oracles.hpp"
#include "luf/rle_string.hpp"
#include "luf/rle_text.hpp"
#include "luf/stats.hpp"

struct luf_string {
  luf::RleString value;
};

struct luf_result {
  luf::LufResult value;
  luf_stats stats{};
};

namespace {

thread_local std::string last_error;

luf_status status_of(luf::ErrorCode code) {
  switch (code) {
    case luf::ErrorCode::kEmptyInput: return LUF_ERR_EMPTY_INPUT;
    case luf::ErrorCode::kInvalidSymbol: return LUF_ERR_INVALID_SYMBOL;
    case luf::ErrorCode::kDecodeTooLarge: return LUF_ERR_DECODE_TOO_LARGE;
    case luf::ErrorCode::kPositionOutOfRange: return LUF_ERR_POSITION_OUT_OF_RANGE;
    case luf::ErrorCode::kOffsetOutOfRange: return LUF_ERR_OFFSET_OUT_OF_RANGE;
    case luf::ErrorCode::kInvalidArgument: return LUF_ERR_INVALID_ARGUMENT;
    case luf::ErrorCode::kStageRange: return LUF_ERR_STAGE_RANGE;
    case luf::ErrorCode::kBudgetExceeded: return LUF_ERR_BUDGET_EXCEEDED;
    case luf::ErrorCode::kParse: return LUF_ERR_PARSE;
  }
  return LUF_ERR_INTERNAL;
}

luf_status fail(luf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
luf_status guarded(Body&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const luf::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LUF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LUF_ERR_INTERNAL, e.what());
  }
}

luf_status null_argument() { return fail(LUF_ERR_INVALID_ARGUMENT, "null argument"); }

luf_status wrap(luf::RleString value, luf_string** out) {
  *out = new luf_string{std::move(value)};
  return LUF_OK;
}

// Runs `compute` with fresh counters and packages its result.
template <class Compute>
luf_status measured(Compute&& compute, luf_result** out) {
  luf::reset_counters();
  const std::uint64_t baseline = luf::counters().live_words;
  const auto start = std::chrono::steady_clock::now();
  auto value = compute();
  const auto stop = std::chrono::steady_clock::now();
  const luf::OpCounters& c = luf::counters();
  auto* r = new luf_result{std::move(value), {}};
  r->stats.run_comparisons = c.run_comparisons;
  r->stats.rmq_queries = c.rmq_queries;
  r->stats.wlsq_node_visits = c.wlsq_node_visits;
  r->stats.wlsq_search_steps = c.wlsq_search_steps;
  r->stats.total_ops = c.total_ops();
  r->stats.wlsq_queries = c.wlsq_queries;
  r->stats.wlsq_step_bound_violations = c.wlsq_step_bound_violations;
  r->stats.peak_words = c.peak_words - baseline;
  r->stats.wall_seconds = std::chrono::duration<double>(stop - start).count();
  *out = r;
  return LUF_OK;
}

}  // namespace

extern "C" {

const char* luf_last_error(void) { return last_error.c_str(); }

const char* luf_status_name(luf_status status) {
  switch (status) {
    case LUF_OK: return "ok";
    case LUF_ERR_EMPTY_INPUT: return "empty input";
    case LUF_ERR_INVALID_SYMBOL: return "invalid symbol";
    case LUF_ERR_DECODE_TOO_LARGE: return "decode too large";
    case LUF_ERR_POSITION_OUT_OF_RANGE: return "position out of range";
    case LUF_ERR_OFFSET_OUT_OF_RANGE: return "offset out of range";
    case LUF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LUF_ERR_STAGE_RANGE: return "stage out of range";
    case LUF_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case LUF_ERR_PARSE: return "parse error";
    case LUF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

luf_status luf_string_from_rle_text(const char* text, size_t len, luf_string** out) {
  if ((!text && len) || !out) return null_argument();
  return guarded([&] { return wrap(luf::parse_rle_text(std::string_view(text ? text : "", len)), out); });
}

luf_status luf_string_from_bytes(const unsigned char* bytes, size_t len, luf_string** out) {
  if ((!bytes && len) || !out) return null_argument();
  return guarded([&] {
    return wrap(luf::rle_encode_bytes(std::string_view(reinterpret_cast<const char*>(bytes), len)), out);
  });
}

luf_status luf_string_from_runs(const luf_run* runs, size_t count, luf_string** out) {
  if ((!runs && count) || !out) return null_argument();
  return guarded([&] {
    std::vector<luf::Run> list;
    list.reserve(count);
    for (size_t k = 0; k < count; ++k) list.push_back({runs[k].symbol, runs[k].exp});
    if (list.empty()) return fail(LUF_ERR_EMPTY_INPUT, "no runs");
    return wrap(luf::RleString::from_runs(std::move(list)), out);
  });
}

void luf_string_free(luf_string* s) { delete s; }

size_t luf_string_runs(const luf_string* s) { return s ? s->value.runs() : 0; }

int64_t luf_string_length(const luf_string* s) { return s ? s->value.length() : 0; }

luf_status luf_string_run(const luf_string* s, size_t index, luf_run* out) {
  if (!s || !out) return null_argument();
  if (index < 1 || index > s->value.runs()) return fail(LUF_ERR_INVALID_ARGUMENT, "run index out of range");
  *out = luf_run{s->value.ch(index), s->value.exp(index)};
  return LUF_OK;
}

luf_status luf_string_scale(const luf_string* s, int64_t factor, luf_string** out) {
  if (!s || !out) return null_argument();
  return guarded([&] { return wrap(luf::scale_exponents(s->value, factor), out); });
}

luf_status luf_string_factor(const luf_string* s, int64_t start, int64_t end, luf_string** out) {
  if (!s || !out) return null_argument();
  return guarded([&] { return wrap(luf::factor_rle(s->value, {start, end}), out); });
}

luf_status luf_string_decode(const luf_string* s, uint32_t* buf, size_t capacity, size_t* len) {
  if (!s || !len) return null_argument();
  const luf::Pos n = s->value.length();
  *len = static_cast<size_t>(n);
  if (!buf || capacity < static_cast<size_t>(n)) return LUF_OK;
  return guarded([&] {
    size_t at = 0;
    for (const luf::Run& run : s->value.run_list())
      for (luf::Pos k = 0; k < run.exp; ++k) buf[at++] = run.ch;
    return LUF_OK;
  });
}

void luf_options_init(luf_options* options) {
  if (!options) return;
  options->threads = 1;
  options->cascade = 1;
}

luf_status luf_compute(const luf_string* s, const luf_options* options, luf_result** out) {
  if (!s || !out) return null_argument();
  luf::DriverOptions opts;
  if (options) {
    opts.threads = options->threads == 0 ? 1 : options->threads;
    opts.wlsq.cascade = options->cascade != 0;
  }
  return guarded([&] { return measured([&] { return luf::longest_unbordered_factors(s->value, opts); }, out); });
}

luf_status luf_oracle(const luf_string* s, int64_t max_n, luf_result** out) {
  if (!s || !out) return null_argument();
  return guarded([&] {
    luf::oracle::OracleBudget budget;
    budget.max_n = max_n;
    if (s->value.length() > max_n)
      return fail(LUF_ERR_BUDGET_EXCEEDED,
                  "text length " + std::to_string(s->value.length()) + " exceeds decode budget " + std::to_string(max_n));
    return measured([&] { return luf::oracle::naive_luf(luf::rle_decode(s->value, max_n), budget); }, out);
  });
}

void luf_result_free(luf_result* r) { delete r; }

int64_t luf_result_length(const luf_result* r) { return r ? r->value.length : 0; }

size_t luf_result_count(const luf_result* r) { return r ? r->value.occurrences.size() : 0; }

luf_status luf_result_occurrence(const luf_result* r, size_t k, int64_t* start, int64_t* end) {
  if (!r || !start || !end) return null_argument();
  if (k >= r->value.occurrences.size()) return fail(LUF_ERR_INVALID_ARGUMENT, "occurrence index out of range");
  *start = r->value.occurrences[k].start;
  *end = r->value.occurrences[k].end;
  return LUF_OK;
}

luf_status luf_result_stats(const luf_result* r, luf_stats* out) {
  if (!r || !out) return null_argument();
  *out = r->stats;
  return LUF_OK;
}

}  // extern "C"
