#include "repeatscan/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace repeatscan::oracle {

bool is_repeat(const Text& text, Position start, Length length) {
  const std::size_t n = text.size();
  if (length == 0 || start < 1 ||
      static_cast<std::size_t>(start) + length - 1 > n) {
    throw std::out_of_range("is_repeat: interval [" + std::to_string(start) +
                            ", +" + std::to_string(length) +
                            ") is not a substring of a text of length " +
                            std::to_string(n));
  }
  const std::string_view s = text.view();
  const std::string_view needle = s.substr(start - 1, length);
  const std::size_t first = s.find(needle);
  return s.find(needle, first + 1) != std::string_view::npos;
}

LrAnswer llr(const Text& text, Position i) {
  check_position(i, text.size(), "oracle::llr");
  // Any prefix of a repeat is a repeat, so lengths can be tried upward.
  Length best = 0;
  const std::size_t room = text.size() - i + 1;
  while (best < room && is_repeat(text, i, best + 1)) ++best;
  return best == 0 ? LrAnswer::none() : LrAnswer{true, i, best};
}

LrAnswerSet all_lr(const Text& text, Position k) {
  const std::size_t n = text.size();
  check_position(k, n, "oracle::all_lr");
  // Dropping an end that is not k keeps a covering repeat covering and
  // repeated, so covering repeats exist for every length up to the
  // maximum: grow the length until none is found.
  LrAnswerSet best;
  for (std::size_t len = 1; len <= n; ++len) {
    LrAnswerSet found;
    const std::size_t lo = k >= len ? k - len + 1 : 1;
    for (std::size_t start = lo; start <= k && start + len - 1 <= n; ++start) {
      if (is_repeat(text, static_cast<Position>(start),
                    static_cast<Length>(len))) {
        found.push_back(
            {static_cast<Position>(start), static_cast<Length>(len)});
      }
    }
    if (found.empty()) break;
    best = std::move(found);
  }
  return best;
}

LrAnswer leftmost_lr(const Text& text, Position k) {
  const LrAnswerSet all = all_lr(text, k);
  return all.empty() ? LrAnswer::none() : LrAnswer::of(all.front());
}

SuffixStructures suffix_structures(const Text& text) {
  const std::size_t n = text.size();
  const std::string_view s = text.view();
  SuffixStructures out;
  out.sa.resize(n);
  std::iota(out.sa.begin(), out.sa.end(), Position{1});
  std::sort(out.sa.begin(), out.sa.end(), [s](Position a, Position b) {
    return s.substr(a - 1) < s.substr(b - 1);
  });
  out.rank.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.rank[out.sa[j] - 1] = static_cast<Position>(j + 1);
  }
  out.lcp.assign(n + 1, 0);
  for (std::size_t j = 1; j < n; ++j) {
    const std::string_view a = s.substr(out.sa[j - 1] - 1);
    const std::string_view b = s.substr(out.sa[j] - 1);
    Length common = 0;
    while (common < a.size() && common < b.size() && a[common] == b[common]) {
      ++common;
    }
    out.lcp[j] = common;
  }
  return out;
}

}  // namespace repeatscan::oracle
