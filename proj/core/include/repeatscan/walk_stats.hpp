#pragma once

#include <cstdint>
#include <vector>

#include "repeatscan/llr.hpp"
#include "repeatscan/lr_query.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan {

/// Walk-step statistics over the positions that have a longest repeat.
///
/// A step is one covering LLR examined by the query walk; the entry that
/// triggers the break is not counted. Positions without a repeat take no
/// steps and are excluded from min, max and average.
struct WalkStats {
  LlrPath path = LlrPath::raw;
  std::uint64_t positions = 0;  ///< positions with a repeat
  std::uint64_t total_steps = 0;
  std::uint64_t min_steps = 0;
  std::uint64_t max_steps = 0;

  /// total_steps / positions, or 0 when no position has a repeat.
  [[nodiscard]] double average() const noexcept {
    return positions == 0 ? 0.0
                          : static_cast<double>(total_steps) /
                                static_cast<double>(positions);
  }
};

/// Steps per position (slot k - 1 for position k) of the raw-array walk.
///
/// Right ends of the raw LLRs never decrease, so the walk from k examines
/// exactly the slots [first(k), k] with first(k) = min{i : end(i) >= k};
/// first(k) is monotone in k and a single sweep yields every count.
std::vector<std::uint32_t> raw_walk_steps(const RawLlrArray& raw);

/// Steps per position of the compact-array walk: the entries between the
/// binary-search hit and the last entry starting at or before k.
std::vector<std::uint32_t> compact_walk_steps(const CompactLlrArray& c);

/// Counts steps for one position by running the walk itself.
std::uint32_t instrumented_raw_steps(const RawLlrArray& raw, Position k);
std::uint32_t instrumented_compact_steps(const CompactLlrArray& c, Position k);

/// Aggregates per-position step counts.
WalkStats summarize_walk_steps(const std::vector<std::uint32_t>& steps,
                               LlrPath path);

WalkStats compute_walk_stats(const RawLlrArray& raw);
WalkStats compute_walk_stats(const CompactLlrArray& c);

}  // namespace repeatscan
