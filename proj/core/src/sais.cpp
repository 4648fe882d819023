// SA-IS suffix sorting (Nong, Zhang, Chan). The recursion works on an
// implicit sentinel: the last character is always L-type and the empty
// suffix is never materialised.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "repeatscan/suffix_structures.hpp"

namespace repeatscan::detail {

namespace {

using Slot = std::int32_t;
constexpr Slot kEmpty = -1;

}  // namespace

std::vector<Slot> induced_sort(const std::vector<Slot>& s, Slot upper) {
  const auto n = static_cast<Slot>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<Slot>{0, 1} : std::vector<Slot>{1, 0};

  // is_s[i]: suffix i is S-type (smaller than suffix i + 1).
  std::vector<bool> is_s(n, false);
  for (Slot i = n - 2; i >= 0; --i) {
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];
  }

  // bucket_l[c]: first slot of bucket c. bucket_s[c]: first S slot of c.
  std::vector<Slot> bucket_l(upper + 2, 0);
  std::vector<Slot> bucket_s(upper + 2, 0);
  for (Slot i = 0; i < n; ++i) {
    if (is_s[i]) {
      ++bucket_l[s[i] + 1];
    } else {
      ++bucket_s[s[i]];
    }
  }
  for (Slot c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    bucket_l[c + 1] += bucket_s[c];
  }

  std::vector<Slot> sa(n, kEmpty);
  std::vector<Slot> cursor(upper + 2);

  auto induce = [&](const std::vector<Slot>& lms) {
    std::fill(sa.begin(), sa.end(), kEmpty);
    std::copy(bucket_s.begin(), bucket_s.end(), cursor.begin());
    for (Slot d : lms) {
      sa[cursor[s[d]]++] = d;
    }
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    sa[cursor[s[n - 1]]++] = n - 1;
    for (Slot i = 0; i < n; ++i) {
      const Slot v = sa[i];
      if (v >= 1 && !is_s[v - 1]) sa[cursor[s[v - 1]]++] = v - 1;
    }
    std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
    for (Slot i = n - 1; i >= 0; --i) {
      const Slot v = sa[i];
      if (v >= 1 && is_s[v - 1]) sa[--cursor[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<Slot> lms_index(n + 1, kEmpty);
  std::vector<Slot> lms;
  for (Slot i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_index[i] = static_cast<Slot>(lms.size());
      lms.push_back(i);
    }
  }
  const auto m = static_cast<Slot>(lms.size());

  induce(lms);
  if (m == 0) return sa;

  std::vector<Slot> sorted_lms;
  sorted_lms.reserve(m);
  for (Slot v : sa) {
    if (lms_index[v] != kEmpty) sorted_lms.push_back(v);
  }

  // Name LMS substrings; equal substrings share a name.
  std::vector<Slot> reduced(m);
  Slot name = 0;
  reduced[lms_index[sorted_lms[0]]] = 0;
  for (Slot t = 1; t < m; ++t) {
    Slot l = sorted_lms[t - 1];
    Slot r = sorted_lms[t];
    const Slot end_l = lms_index[l] + 1 < m ? lms[lms_index[l] + 1] : n;
    const Slot end_r = lms_index[r] + 1 < m ? lms[lms_index[r] + 1] : n;
    bool same = end_l - l == end_r - r;
    if (same) {
      while (l < end_l && s[l] == s[r]) {
        ++l;
        ++r;
      }
      if (l == n || s[l] != s[r]) same = false;
    }
    if (!same) ++name;
    reduced[lms_index[sorted_lms[t]]] = name;
  }

  const std::vector<Slot> reduced_sa = induced_sort(reduced, name);
  for (Slot t = 0; t < m; ++t) {
    sorted_lms[t] = lms[reduced_sa[t]];
  }
  induce(sorted_lms);
  return sa;
}

}  // namespace repeatscan::detail
