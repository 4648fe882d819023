#include "repeatscan/suffix_structures.hpp"

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

namespace repeatscan {

SuffixStructures build_suffix_structures(const Text& text) {
  const std::size_t n = text.size();
  SuffixStructures out;
  out.lcp.assign(n + 1, 0);
  if (n == 0) return out;

  const std::string_view s = text.view();
  std::vector<std::int32_t> symbols(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols[i] = static_cast<unsigned char>(s[i]);
  }
  std::vector<std::int32_t> sa0 = detail::induced_sort(symbols, 255);
  symbols.clear();
  symbols.shrink_to_fit();

  out.sa.resize(n);
  out.rank.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.sa[j] = static_cast<Position>(sa0[j]) + 1;
    out.rank[static_cast<std::size_t>(sa0[j])] = static_cast<Position>(j) + 1;
  }

  // Kasai et al.: visiting suffixes in text order, the lcp with the
  // lexicographic predecessor drops by at most one per step.
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = out.rank[i] - 1;
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t prev = out.sa[r - 1] - 1;
    while (i + h < n && prev + h < n && s[i + h] == s[prev + h]) ++h;
    out.lcp[r] = static_cast<Length>(h);
    if (h > 0) --h;
  }
  return out;
}

bool verify_suffix_structures(const Text& text, const SuffixStructures& s) {
  const std::size_t n = text.size();
  if (s.sa.size() != n || s.rank.size() != n || s.lcp.size() != n + 1) {
    return false;
  }
  if (s.lcp.front() != 0 || s.lcp.back() != 0) return false;

  std::vector<bool> seen(n, false);
  for (Position p : s.sa) {
    if (p < 1 || p > n || seen[p - 1]) return false;
    seen[p - 1] = true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (s.rank[s.sa[j] - 1] != j + 1) return false;
  }

  const std::string_view str = text.view();
  for (std::size_t j = 1; j < n; ++j) {
    const std::string_view a = str.substr(s.sa[j - 1] - 1);
    const std::string_view b = str.substr(s.sa[j] - 1);
    std::size_t common = 0;
    const std::size_t limit = std::min(a.size(), b.size());
    while (common < limit && a[common] == b[common]) ++common;
    if (common != s.lcp[j]) return false;
    // Strict order: either a is a proper prefix of b or they differ at
    // `common` with a smaller byte.
    const bool ordered =
        common == a.size()
            ? a.size() < b.size()
            : common < b.size() && static_cast<unsigned char>(a[common]) <
                                       static_cast<unsigned char>(b[common]);
    if (!ordered) return false;
  }
  return true;
}

}  // namespace repeatscan
