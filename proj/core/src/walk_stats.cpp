#include "repeatscan/walk_stats.hpp"

#include <algorithm>
#include <limits>

#include "repeatscan/detail/walk.hpp"

namespace repeatscan {

std::vector<std::uint32_t> raw_walk_steps(const RawLlrArray& raw) {
  const std::size_t n = raw.size();
  std::vector<std::uint32_t> steps(n, 0);
  // `first` is a 0-based slot; end(i) >= k  <=>  i + len > k (1-based i).
  std::size_t first = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (raw.lengths[k - 1] == 0) continue;
    while ((first + 1) + raw.lengths[first] <= k) ++first;
    steps[k - 1] = static_cast<std::uint32_t>(k - first);
  }
  return steps;
}

std::vector<std::uint32_t> compact_walk_steps(const CompactLlrArray& c) {
  const std::size_t n = c.text_length;
  std::vector<std::uint32_t> steps(n, 0);
  const auto& e = c.entries;
  std::size_t first = 0;  // first entry with end >= k
  std::size_t stop = 0;   // first entry with start > k
  for (std::size_t k = 1; k <= n; ++k) {
    while (first < e.size() && e[first].end() < k) ++first;
    while (stop < e.size() && e[stop].start <= k) ++stop;
    steps[k - 1] = stop > first ? static_cast<std::uint32_t>(stop - first) : 0;
  }
  return steps;
}

std::uint32_t instrumented_raw_steps(const RawLlrArray& raw, Position k) {
  check_position(k, raw.size(), "instrumented_raw_steps");
  std::uint32_t steps = 0;
  detail::walk_raw(raw, k, [&](const LlrEntry&) { ++steps; });
  return steps;
}

std::uint32_t instrumented_compact_steps(const CompactLlrArray& c, Position k) {
  check_position(k, c.text_length, "instrumented_compact_steps");
  std::uint32_t steps = 0;
  if (const auto first = detail::first_ending_at_or_after(c, k)) {
    detail::walk_compact(c, *first, k, [&](const LlrEntry&) { ++steps; });
  }
  return steps;
}

WalkStats summarize_walk_steps(const std::vector<std::uint32_t>& steps,
                               LlrPath path) {
  WalkStats stats;
  stats.path = path;
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  for (std::uint32_t s : steps) {
    if (s == 0) continue;
    ++stats.positions;
    stats.total_steps += s;
    lo = std::min<std::uint64_t>(lo, s);
    stats.max_steps = std::max<std::uint64_t>(stats.max_steps, s);
  }
  stats.min_steps = stats.positions == 0 ? 0 : lo;
  return stats;
}

WalkStats compute_walk_stats(const RawLlrArray& raw) {
  return summarize_walk_steps(raw_walk_steps(raw), LlrPath::raw);
}

WalkStats compute_walk_stats(const CompactLlrArray& c) {
  return summarize_walk_steps(compact_walk_steps(c), LlrPath::compact);
}

}  // namespace repeatscan
