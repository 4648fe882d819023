#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>

#include "repeatscan/llr.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan::detail {

// Leftward walk over the raw array from slot k. Visits <i, len> for each
// covering LLR and stops at the first one that does not cover k: right
// ends are non-decreasing, so nothing further left can cover k either.
template <typename Visit>
void walk_raw(const RawLlrArray& raw, Position k, Visit&& visit) {
  for (Position i = k; i >= 1; --i) {
    const Length len = raw.at(i);
    if (static_cast<std::size_t>(i) + len <= k) break;  // i + len - 1 < k
    visit(LlrEntry{i, len});
  }
}

// Smallest slot whose entry ends at or after k.
inline std::optional<std::size_t> first_ending_at_or_after(
    const CompactLlrArray& c, Position k) {
  const auto it = std::partition_point(
      c.entries.begin(), c.entries.end(),
      [k](const LlrEntry& e) { return e.end() < k; });
  if (it == c.entries.end()) return std::nullopt;
  return static_cast<std::size_t>(it - c.entries.begin());
}

// Rightward walk from `first` while entries still start at or before k.
// Ends strictly increase, so every visited entry covers k.
template <typename Visit>
void walk_compact(const CompactLlrArray& c, std::size_t first, Position k,
                  Visit&& visit) {
  for (std::size_t t = first; t < c.entries.size(); ++t) {
    const LlrEntry& e = c.entries[t];
    if (e.start > k) break;
    visit(e);
  }
}

}  // namespace repeatscan::detail
