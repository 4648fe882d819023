#pragma once

#include <cstddef>
#include <vector>

#include "repeatscan/suffix_structures.hpp"
#include "repeatscan/text.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan::oracle {

// Brute-force ground truth built from direct substring search only. Slow
// (cubic or worse); meant for small inputs in tests and self checks.

/// Default input-size cap for oracle runs from the command line.
inline constexpr std::size_t kDefaultSizeCap = 4096;

/// True iff S[start .. start + length - 1] occurs at two or more distinct
/// start positions; occurrences may overlap. Throws std::out_of_range on
/// an empty or out-of-bounds interval.
[[nodiscard]] bool is_repeat(const Text& text, Position start, Length length);

/// Longest repeat starting exactly at i, or none if S[i] is unique.
LrAnswer llr(const Text& text, Position i);

/// Every maximum-length repeat interval containing k, increasing start.
LrAnswerSet all_lr(const Text& text, Position k);

/// Smallest-start element of all_lr, or none.
LrAnswer leftmost_lr(const Text& text, Position k);

/// Suffix array, rank and LCP by comparison sort of all suffixes and
/// character-by-character LCP. Same layout as build_suffix_structures.
SuffixStructures suffix_structures(const Text& text);

}  // namespace repeatscan::oracle
