#pragma once

#include <string>
#include <string_view>

#include "luf/rle_string.hpp"

namespace luf {

/// Parses whitespace-separated `c:exp` tokens; `#` starts a comment that runs
/// to the end of the line. `c` is a single byte, `exp` a decimal integer in
/// [1, 2^63 - 1]. Adjacent tokens with the same symbol are merged. Throws
/// Error(kParse) with a line number on malformed input.
RleString parse_rle_text(std::string_view text);

/// Inverse of parse_rle_text for byte alphabets: one `c:exp` token per run.
std::string format_rle_text(const RleString& r);

}  // namespace luf
