/* C interface to the longest-unbordered-factor library. All handles are
 * opaque; every fallible call returns a luf_status and, on failure, sets a
 * per-thread message readable through luf_last_error(). Positions and run
 * indices are 1-based. */
#ifndef LUF_LUF_H
#define LUF_LUF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LUF_API __declspec(dllexport)
#else
#define LUF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum luf_status {
  LUF_OK = 0,
  LUF_ERR_EMPTY_INPUT = 1,
  LUF_ERR_INVALID_SYMBOL = 2,
  LUF_ERR_DECODE_TOO_LARGE = 3,
  LUF_ERR_POSITION_OUT_OF_RANGE = 4,
  LUF_ERR_OFFSET_OUT_OF_RANGE = 5,
  LUF_ERR_INVALID_ARGUMENT = 6,
  LUF_ERR_STAGE_RANGE = 7,
  LUF_ERR_BUDGET_EXCEEDED = 8,
  LUF_ERR_PARSE = 9,
  LUF_ERR_INTERNAL = 10
} luf_status;

typedef struct luf_string luf_string;
typedef struct luf_result luf_result;

typedef struct luf_run {
  uint32_t symbol;
  int64_t exp;
} luf_run;

typedef struct luf_options {
  unsigned threads; /* stages run concurrently when > 1 */
  int cascade;      /* nonzero: fractional cascading in stabbing queries */
} luf_options;

typedef struct luf_stats {
  uint64_t run_comparisons;
  uint64_t rmq_queries;
  uint64_t wlsq_node_visits;
  uint64_t wlsq_search_steps;
  uint64_t total_ops;
  uint64_t peak_words; /* auxiliary memory high-water mark, machine words */
  double wall_seconds;
  uint64_t wlsq_queries;
  uint64_t wlsq_step_bound_violations; /* queries over ceil(log2|S|) + 4 ceil(log2 N) steps */
} luf_stats;

LUF_API const char* luf_last_error(void);
LUF_API const char* luf_status_name(luf_status status);

/* Strings. */
LUF_API luf_status luf_string_from_rle_text(const char* text, size_t len, luf_string** out);
LUF_API luf_status luf_string_from_bytes(const unsigned char* bytes, size_t len, luf_string** out);
LUF_API luf_status luf_string_from_runs(const luf_run* runs, size_t count, luf_string** out);
LUF_API void luf_string_free(luf_string* s);
LUF_API size_t luf_string_runs(const luf_string* s);
LUF_API int64_t luf_string_length(const luf_string* s);
LUF_API luf_status luf_string_run(const luf_string* s, size_t index, luf_run* out);
/* Multiplies every exponent by factor >= 1. */
LUF_API luf_status luf_string_scale(const luf_string* s, int64_t factor, luf_string** out);
/* The RLE of the factor s[start..end]. */
LUF_API luf_status luf_string_factor(const luf_string* s, int64_t start, int64_t end, luf_string** out);
/* Writes the decoded text as 32-bit symbols into buf when capacity allows;
 * *len receives the text length either way. */
LUF_API luf_status luf_string_decode(const luf_string* s, uint32_t* buf, size_t capacity, size_t* len);

/* Computation. */
LUF_API void luf_options_init(luf_options* options);
LUF_API luf_status luf_compute(const luf_string* s, const luf_options* options, luf_result** out);
/* Character-level reference; fails with LUF_ERR_BUDGET_EXCEEDED when the
 * text is longer than max_n symbols. */
LUF_API luf_status luf_oracle(const luf_string* s, int64_t max_n, luf_result** out);

/* Results. Occurrences are sorted by start. */
LUF_API void luf_result_free(luf_result* r);
LUF_API int64_t luf_result_length(const luf_result* r);
LUF_API size_t luf_result_count(const luf_result* r);
LUF_API luf_status luf_result_occurrence(const luf_result* r, size_t k, int64_t* start, int64_t* end);
LUF_API luf_status luf_result_stats(const luf_result* r, luf_stats* out);

#ifdef __cplusplus
}
#endif

#endif /* LUF_LUF_H */
