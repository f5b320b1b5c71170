#pragma once

#include "luf/rle_string.hpp"
#include "luf/types.hpp"
#include "luf/wlsq.hpp"

namespace luf {

struct DriverOptions {
  unsigned threads = 1;  // stages run concurrently when > 1
  WlsqOptions wlsq;
};

/// Longest unbordered factors among those of RLE size at most 4 floor(sqrt(m)).
LufResult longest_short_ub(const RleString& t);

/// All occurrences of all longest unbordered factors of t. A unary string
/// reports length 1 with the single occurrence (1, 1).
LufResult longest_unbordered_factors(const RleString& t, const DriverOptions& options = {});

}  // namespace luf
