#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "repeatscan/llr.hpp"
#include "repeatscan/lr_query.hpp"
#include "repeatscan/oracle.hpp"
#include "repeatscan/suffix_structures.hpp"
#include "test_support.hpp"

namespace repeatscan {
namespace {

struct Built {
  Text text;
  RawLlrArray raw;
  CompactLlrArray compact;
};

Built build(const std::string& s) {
  Built b{Text(s), {}, {}};
  b.raw = build_raw_llr(build_suffix_structures(b.text));
  b.compact = compact_llr_sequential(b.raw);
  return b;
}

// Checks every position of `s` against the oracle on both paths and both
// modes, plus the structural facts that tie answers to the raw array.
void check_string(const std::string& s) {
  const Built b = build(s);
  for (Position k = 1; k <= s.size(); ++k) {
    const LrAnswerSet expect_all = oracle::all_lr(b.text, k);
    const LrAnswer expect = expect_all.empty()
                                ? LrAnswer::none()
                                : LrAnswer::of(expect_all.front());

    const LrAnswer raw = leftmost_lr_raw(b.raw, k);
    const LrAnswer compact = leftmost_lr_compact(b.compact, k);
    ASSERT_EQ(raw, expect) << s << " k=" << k;
    ASSERT_EQ(compact, expect) << s << " k=" << k;
    ASSERT_EQ(all_lr_raw(b.raw, k), expect_all) << s << " k=" << k;
    ASSERT_EQ(all_lr_compact(b.compact, k), expect_all) << s << " k=" << k;

    // A found repeat is always the LLR of its own start.
    if (raw.exists) ASSERT_EQ(raw.length, b.raw.at(raw.start));

    // Early stopping must not lose anything a full scan would find.
    ASSERT_EQ(raw, testing::full_scan_leftmost(b.raw, k));
    ASSERT_EQ(all_lr_raw(b.raw, k), testing::full_scan_all(b.raw, k));

    // No covering repeat exists exactly when S[k] occurs once.
    const bool singleton = s.find(s[k - 1]) == s.rfind(s[k - 1]);
    ASSERT_EQ(!raw.exists, singleton) << s << " k=" << k;
  }
}

TEST(Properties, ExhaustiveSmallStrings) {
  for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
    const std::size_t max_len = sigma == 1 ? 12 : (sigma == 2 ? 11 : 7);
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (const std::string& s : testing::all_strings(len, sigma)) {
        ASSERT_NO_FATAL_FAILURE(check_string(s));
      }
    }
  }
}

TEST(Properties, RandomStrings) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string s =
        testing::random_string(rng, 1 + rng() % 40, 1 + rng() % 4);
    ASSERT_NO_FATAL_FAILURE(check_string(s));
  }
}

TEST(Properties, WorkerCountDoesNotChangeAnswers) {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 20; ++iter) {
    const Text t(testing::random_string(rng, 500 + rng() % 3000,
                                        1 + rng() % 4));
    for (QueryMode mode : {QueryMode::leftmost, QueryMode::all}) {
      const PositionAnswers base =
          all_positions(t, mode, LlrPath::raw, ExecPolicy::sequential());
      for (LlrPath path : {LlrPath::raw, LlrPath::compact}) {
        for (unsigned w : {1U, 2U, 3U, 8U}) {
          const PositionAnswers got =
              all_positions(t, mode, path, ExecPolicy::parallel(w));
          ASSERT_EQ(got.leftmost, base.leftmost);
          ASSERT_EQ(got.all, base.all);
        }
      }
    }
  }
}

TEST(Properties, AnswersAreLlrsOfTheirStart) {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 50; ++iter) {
    const Built b = build(testing::random_dna(rng, 2000));
    for (Position k = 1; k <= b.raw.size(); ++k) {
      for (const LlrEntry& e : all_lr_compact(b.compact, k)) {
        ASSERT_EQ(e.length, b.raw.at(e.start));
        ASSERT_TRUE(e.covers(k));
      }
    }
  }
}

}  // namespace
}  // namespace repeatscan
