#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace luf {

/// Text positions and lengths. Exponents can be far larger than the run count.
using Pos = std::int64_t;

/// Alphabet symbol. Bytes map to 0..255; kSentinel never occurs in user input.
using Symbol = std::uint32_t;
inline constexpr Symbol kSentinel = std::numeric_limits<Symbol>::max();

inline constexpr Pos kInfinity = std::numeric_limits<Pos>::max();

enum class ErrorCode {
  kEmptyInput,
  kInvalidSymbol,
  kDecodeTooLarge,
  kPositionOutOfRange,
  kOffsetOutOfRange,
  kInvalidArgument,
  kStageRange,
  kBudgetExceeded,
  kParse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A factor T[start..end], 1-based and inclusive.
struct Occurrence {
  Pos start = 0;
  Pos end = 0;

  Pos length() const { return end - start + 1; }
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// Longest unbordered factors: their common length and every occurrence, sorted by start.
struct LufResult {
  Pos length = 0;
  std::vector<Occurrence> occurrences;

  friend bool operator==(const LufResult&, const LufResult&) = default;
};

}  // namespace luf
