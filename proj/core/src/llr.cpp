#include "repeatscan/llr.hpp"

#include <algorithm>
#include <stdexcept>

namespace repeatscan {

RawLlrArray build_raw_llr(const SuffixStructures& s, const ExecPolicy& policy) {
  const std::size_t n = s.size();
  RawLlrArray raw;
  raw.lengths.resize(n);
  const Position* rank = s.rank.data();
  const Length* lcp = s.lcp.data();
  Length* out = raw.lengths.data();
  parallel_for(0, n, policy, [=](std::size_t i) {
    // LCP[Rank[i]] sits in slot rank - 1, LCP[Rank[i] + 1] in slot rank.
    const Position r = rank[i];
    out[i] = std::max(lcp[r - 1], lcp[r]);
  });
  return raw;
}

CompactLlrArray compact_llr_sequential(const RawLlrArray& raw) {
  CompactLlrArray out;
  out.text_length = raw.size();
  Length prev = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Length len = raw.lengths[i];
    if (len > 0 && len >= prev) {
      out.entries.push_back({static_cast<Position>(i + 1), len});
    }
    prev = len;
  }
  return out;
}

std::vector<std::uint8_t> compute_flags(const RawLlrArray& raw,
                                        const ExecPolicy& policy) {
  const std::size_t n = raw.size();
  std::vector<std::uint8_t> flags(n);
  const Length* len = raw.lengths.data();
  std::uint8_t* out = flags.data();
  parallel_for(0, n, policy, [=](std::size_t i) {
    const bool keep = len[i] > 0 && (i == 0 || len[i] >= len[i - 1]);
    out[i] = keep ? 1 : 0;
  });
  return flags;
}

std::vector<std::uint32_t> prefix_sum(std::span<const std::uint8_t> flags,
                                      const ExecPolicy& policy) {
  return parallel_scan(flags, policy);
}

CompactLlrArray scatter_compact(const RawLlrArray& raw,
                                std::span<const std::uint8_t> flags,
                                std::span<const std::uint32_t> prefix,
                                const ExecPolicy& policy) {
  const std::size_t n = raw.size();
  if (flags.size() != n || prefix.size() != n) {
    throw std::invalid_argument(
        "scatter_compact: flag and prefix-sum arrays must match the raw "
        "array length");
  }
  CompactLlrArray out;
  out.text_length = n;
  out.entries.resize(n == 0 ? 0 : prefix.back());
  const Length* len = raw.lengths.data();
  LlrEntry* dest = out.entries.data();
  parallel_for(0, n, policy, [=](std::size_t i) {
    if (flags[i] != 0) {
      dest[prefix[i] - 1] = {static_cast<Position>(i + 1), len[i]};
    }
  });
  return out;
}

CompactLlrArray compact_llr_parallel(const RawLlrArray& raw,
                                     const ExecPolicy& policy) {
  const auto flags = compute_flags(raw, policy);
  const auto prefix = prefix_sum(flags, policy);
  return scatter_compact(raw, flags, prefix, policy);
}

}  // namespace repeatscan
