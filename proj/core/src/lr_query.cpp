#include "repeatscan/lr_query.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "repeatscan/detail/walk.hpp"
#include "repeatscan/suffix_structures.hpp"

namespace repeatscan {

namespace {

void check_range(PositionRange range, std::size_t n) {
  if (range.size() == 0) return;
  if (range.first < 1 || range.last > n) {
    throw std::out_of_range("position range [" + std::to_string(range.first) +
                            ", " + std::to_string(range.last) +
                            "] outside [1, " + std::to_string(n) + "]");
  }
}

template <typename Answer, typename Query>
std::vector<Answer> map_range(PositionRange range, const ExecPolicy& policy,
                              Query&& query) {
  std::vector<Answer> out(range.size());
  parallel_for(0, out.size(), policy, [&](std::size_t j) {
    out[j] = query(static_cast<Position>(range.first + j));
  });
  return out;
}

}  // namespace

LrAnswer leftmost_lr_raw(const RawLlrArray& raw, Position k) {
  check_position(k, raw.size(), "leftmost_lr_raw");
  LrAnswer best;
  detail::walk_raw(raw, k, [&](LlrEntry e) {
    // >= while walking left keeps the smallest start among equals.
    if (e.length >= best.length) best = LrAnswer::of(e);
  });
  return best;
}

LrAnswerSet all_lr_raw(const RawLlrArray& raw, Position k) {
  check_position(k, raw.size(), "all_lr_raw");
  Length longest = 0;
  detail::walk_raw(raw, k,
                   [&](LlrEntry e) { longest = std::max(longest, e.length); });
  LrAnswerSet out;
  if (longest == 0) return out;
  detail::walk_raw(raw, k, [&](LlrEntry e) {
    if (e.length == longest) out.push_back(e);
  });
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> find_start_index(const CompactLlrArray& c,
                                            Position k) {
  check_position(k, c.text_length, "find_start_index");
  return detail::first_ending_at_or_after(c, k);
}

LrAnswer leftmost_lr_compact(const CompactLlrArray& c, Position k) {
  check_position(k, c.text_length, "leftmost_lr_compact");
  LrAnswer best;
  const auto first = detail::first_ending_at_or_after(c, k);
  if (!first) return best;
  detail::walk_compact(c, *first, k, [&](const LlrEntry& e) {
    if (e.length > best.length) best = LrAnswer::of(e);
  });
  return best;
}

LrAnswerSet all_lr_compact(const CompactLlrArray& c, Position k) {
  check_position(k, c.text_length, "all_lr_compact");
  LrAnswerSet out;
  const auto first = detail::first_ending_at_or_after(c, k);
  if (!first) return out;
  Length longest = 0;
  detail::walk_compact(c, *first, k, [&](const LlrEntry& e) {
    longest = std::max(longest, e.length);
  });
  detail::walk_compact(c, *first, k, [&](const LlrEntry& e) {
    if (e.length == longest) out.push_back(e);
  });
  return out;
}

std::vector<LrAnswer> leftmost_positions(const RawLlrArray& raw,
                                         PositionRange range,
                                         const ExecPolicy& policy) {
  check_range(range, raw.size());
  return map_range<LrAnswer>(
      range, policy, [&](Position k) { return leftmost_lr_raw(raw, k); });
}

std::vector<LrAnswer> leftmost_positions(const CompactLlrArray& c,
                                         PositionRange range,
                                         const ExecPolicy& policy) {
  check_range(range, c.text_length);
  return map_range<LrAnswer>(
      range, policy, [&](Position k) { return leftmost_lr_compact(c, k); });
}

std::vector<LrAnswerSet> all_lr_positions(const RawLlrArray& raw,
                                          PositionRange range,
                                          const ExecPolicy& policy) {
  check_range(range, raw.size());
  return map_range<LrAnswerSet>(
      range, policy, [&](Position k) { return all_lr_raw(raw, k); });
}

std::vector<LrAnswerSet> all_lr_positions(const CompactLlrArray& c,
                                          PositionRange range,
                                          const ExecPolicy& policy) {
  check_range(range, c.text_length);
  return map_range<LrAnswerSet>(
      range, policy, [&](Position k) { return all_lr_compact(c, k); });
}

PositionAnswers all_positions(const Text& text, QueryMode mode, LlrPath path,
                              const ExecPolicy& policy) {
  PositionAnswers out;
  out.mode = mode;
  out.range = PositionRange::whole(text.size());
  if (text.empty()) return out;

  const SuffixStructures structures = build_suffix_structures(text);
  const RawLlrArray raw = build_raw_llr(structures, policy);

  if (path == LlrPath::raw) {
    if (mode == QueryMode::leftmost) {
      out.leftmost = leftmost_positions(raw, out.range, policy);
    } else {
      out.all = all_lr_positions(raw, out.range, policy);
    }
    return out;
  }

  const CompactLlrArray compact = policy.mode() == ExecMode::sequential
                                      ? compact_llr_sequential(raw)
                                      : compact_llr_parallel(raw, policy);
  if (mode == QueryMode::leftmost) {
    out.leftmost = leftmost_positions(compact, out.range, policy);
  } else {
    out.all = all_lr_positions(compact, out.range, policy);
  }
  return out;
}

}  // namespace repeatscan
