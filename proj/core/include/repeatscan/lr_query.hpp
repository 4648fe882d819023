#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "repeatscan/llr.hpp"
#include "repeatscan/parallel.hpp"
#include "repeatscan/text.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan {

enum class QueryMode { leftmost, all };
enum class LlrPath { raw, compact };

/// Inclusive 1-based position interval.
struct PositionRange {
  Position first = 1;
  Position last = 0;

  [[nodiscard]] std::size_t size() const noexcept {
    return last >= first ? static_cast<std::size_t>(last - first) + 1 : 0;
  }
  /// [1, n]; empty when n == 0.
  static PositionRange whole(std::size_t n) {
    return {1, static_cast<Position>(n)};
  }
};

// Single-position queries. Each throws std::out_of_range unless
// 1 <= k <= n.

/// Longest covering LLR found walking left from k; ties go to the
/// smallest start.
LrAnswer leftmost_lr_raw(const RawLlrArray& raw, Position k);

/// Two leftward walks: the first finds the longest covering length, the
/// second collects every covering LLR of that length.
LrAnswerSet all_lr_raw(const RawLlrArray& raw, Position k);

/// Slot (0-based) of the first compact entry whose right end is >= k, or
/// nullopt when every entry ends before k. That entry need not cover k:
/// its start may exceed k.
std::optional<std::size_t> find_start_index(const CompactLlrArray& c,
                                            Position k);

/// Binary search for the first candidate, then a rightward walk while
/// entries start at or before k. Ties go to the first entry seen.
LrAnswer leftmost_lr_compact(const CompactLlrArray& c, Position k);

/// Two rightward walks from find_start_index, as in all_lr_raw.
LrAnswerSet all_lr_compact(const CompactLlrArray& c, Position k);

// Batch queries over a position range; slot j holds the answer for
// range.first + j. Throws std::out_of_range for ranges outside [1, n].

std::vector<LrAnswer> leftmost_positions(const RawLlrArray& raw,
                                         PositionRange range,
                                         const ExecPolicy& policy);
std::vector<LrAnswer> leftmost_positions(const CompactLlrArray& c,
                                         PositionRange range,
                                         const ExecPolicy& policy);
std::vector<LrAnswerSet> all_lr_positions(const RawLlrArray& raw,
                                          PositionRange range,
                                          const ExecPolicy& policy);
std::vector<LrAnswerSet> all_lr_positions(const CompactLlrArray& c,
                                          PositionRange range,
                                          const ExecPolicy& policy);

/// Per-position answers; exactly one of the two vectors is populated,
/// according to `mode`.
struct PositionAnswers {
  QueryMode mode = QueryMode::leftmost;
  PositionRange range;
  std::vector<LrAnswer> leftmost;
  std::vector<LrAnswerSet> all;

  [[nodiscard]] std::size_t size() const noexcept { return range.size(); }
};

/// Full pipeline: suffix structures, raw LLR array, optional compaction,
/// then a query for every position 1..n. All four path x exec choices
/// produce identical answers.
PositionAnswers all_positions(const Text& text, QueryMode mode, LlrPath path,
                              const ExecPolicy& policy);

}  // namespace repeatscan
