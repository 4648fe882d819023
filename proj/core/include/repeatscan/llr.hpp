#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "repeatscan/parallel.hpp"
#include "repeatscan/suffix_structures.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan {

/// Raw LLR array: lengths[i - 1] is the length of the left-bounded longest
/// repeat starting at position i, or 0 when S[i] is a singleton.
///
/// Lengths obey lengths[i - 1] <= lengths[i] + 1, so the right ends
/// i + lengths[i - 1] - 1 never decrease with i.
struct RawLlrArray {
  std::vector<Length> lengths;

  [[nodiscard]] std::size_t size() const noexcept { return lengths.size(); }

  /// Length of the LLR at 1-based position i. Unchecked.
  [[nodiscard]] Length at(Position i) const noexcept { return lengths[i - 1]; }
};

/// Compact LLR array: the useful LLRs (those not contained in another LLR)
/// as <start, length> tuples. Starts and ends are both strictly increasing.
struct CompactLlrArray {
  std::vector<LlrEntry> entries;
  /// Length n of the text the entries were derived from.
  std::size_t text_length = 0;

  [[nodiscard]] std::size_t size() const noexcept { return entries.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries.empty(); }
};

/// lengths[i] = max(LCP[Rank[i]], LCP[Rank[i] + 1]); one independent slot
/// per position, evaluated under `policy`.
RawLlrArray build_raw_llr(const SuffixStructures& s,
                          const ExecPolicy& policy = ExecPolicy::sequential());

/// One left-to-right pass keeping <i, L> iff L > 0 and L >= the previous
/// length (the previous length is 0 before position 1).
CompactLlrArray compact_llr_sequential(const RawLlrArray& raw);

/// flag[i] = 1 iff lengths[i] > 0 and (i is the first slot or
/// lengths[i] >= lengths[i - 1]).
std::vector<std::uint8_t> compute_flags(
    const RawLlrArray& raw, const ExecPolicy& policy = ExecPolicy::sequential());

/// Inclusive prefix sum of the flags. The last element is the compact size.
std::vector<std::uint32_t> prefix_sum(
    std::span<const std::uint8_t> flags,
    const ExecPolicy& policy = ExecPolicy::sequential());

/// Writes <i, lengths[i]> to output slot prefix[i] - 1 for every flagged i.
/// Each flagged slot owns a distinct destination, so writes never overlap.
/// Throws std::invalid_argument if the array sizes disagree.
CompactLlrArray scatter_compact(
    const RawLlrArray& raw, std::span<const std::uint8_t> flags,
    std::span<const std::uint32_t> prefix,
    const ExecPolicy& policy = ExecPolicy::sequential());

/// Flag, scan and scatter in sequence; identical to compact_llr_sequential.
CompactLlrArray compact_llr_parallel(const RawLlrArray& raw,
                                     const ExecPolicy& policy);

}  // namespace repeatscan
