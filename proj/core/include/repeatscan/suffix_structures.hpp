#pragma once

#include <cstdint>
#include <vector>

#include "repeatscan/text.hpp"
#include "repeatscan/types.hpp"

namespace repeatscan {

/// Suffix array, rank array and padded LCP array of one text.
///
/// Values are 1-based, slots are 0-based:
///   sa[j - 1]   = SA[j], the start of the j-th smallest suffix
///   rank[i - 1] = Rank[i], so rank[sa[j - 1] - 1] == j
///   lcp[j - 1]  = LCP[j] for j in 1..n+1, with LCP[1] = LCP[n+1] = 0
///
/// Immutable after construction and safe to share across readers.
struct SuffixStructures {
  std::vector<Position> sa;
  std::vector<Position> rank;
  std::vector<Length> lcp;

  [[nodiscard]] std::size_t size() const noexcept { return sa.size(); }
};

/// Builds SA with induced sorting (linear time), rank as its inverse, and
/// LCP from SA + rank in linear time. An empty text yields empty SA/rank
/// and lcp == {0}.
SuffixStructures build_suffix_structures(const Text& text);

/// Checks every structural invariant by direct character comparison:
/// SA is a permutation in strictly increasing suffix order, rank is its
/// inverse, and LCP has zero sentinels and matches each adjacent pair.
/// Quadratic in the worst case; intended for tests and self checks.
[[nodiscard]] bool verify_suffix_structures(const Text& text,
                                            const SuffixStructures& s);

namespace detail {

/// 0-based suffix array of `s` over the integer alphabet [0, upper].
std::vector<std::int32_t> induced_sort(const std::vector<std::int32_t>& s,
                                       std::int32_t upper);

}  // namespace detail

}  // namespace repeatscan
