#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "repeatscan/llr.hpp"
#include "repeatscan/oracle.hpp"
#include "repeatscan/suffix_structures.hpp"
#include "test_support.hpp"

namespace repeatscan {
namespace {

RawLlrArray raw_of(const std::string& s, const ExecPolicy& policy =
                                             ExecPolicy::sequential()) {
  return build_raw_llr(build_suffix_structures(Text(s)), policy);
}

using Entries = std::vector<LlrEntry>;

// Figure-style compaction example: raw lengths, flags, prefix sums, output.
const RawLlrArray kExampleRaw{{3, 2, 1, 1, 3, 2, 1, 1}};
const Entries kExampleCompact{{1, 3}, {4, 1}, {5, 3}, {8, 1}};

TEST(BuildRawLlr, Mississippi) {
  EXPECT_EQ(raw_of("mississippi").lengths,
            (std::vector<Length>{0, 4, 3, 2, 4, 3, 2, 1, 1, 1, 1}));
}

TEST(BuildRawLlr, AllSingletons) {
  EXPECT_EQ(raw_of("abc").lengths, (std::vector<Length>{0, 0, 0}));
}

TEST(BuildRawLlr, UnaryRun) {
  EXPECT_EQ(raw_of("aaaa").lengths, (std::vector<Length>{3, 3, 2, 1}));
}

TEST(BuildRawLlr, EmptyText) { EXPECT_TRUE(raw_of("").lengths.empty()); }

TEST(BuildRawLlr, MatchesOracleLlr) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 400; ++iter) {
    const std::string s =
        testing::random_string(rng, 1 + rng() % 40, 1 + rng() % 4);
    const Text t(s);
    const RawLlrArray raw = raw_of(s, ExecPolicy::parallel(3));
    for (Position i = 1; i <= t.size(); ++i) {
      ASSERT_EQ(raw.at(i), oracle::llr(t, i).length) << s << " i=" << i;
    }
  }
}

TEST(CompactLlrSequential, FigureExample) {
  const CompactLlrArray c = compact_llr_sequential(kExampleRaw);
  EXPECT_EQ(c.entries, kExampleCompact);
  EXPECT_EQ(c.text_length, 8U);
}

TEST(CompactLlrSequential, NothingUseful) {
  EXPECT_TRUE(compact_llr_sequential(RawLlrArray{{0, 0, 0}}).empty());
}

TEST(CompactLlrSequential, Mississippi) {
  EXPECT_EQ(compact_llr_sequential(raw_of("mississippi")).entries,
            (Entries{{2, 4}, {5, 4}, {9, 1}, {10, 1}, {11, 1}}));
}

TEST(CompactLlrSequential, EqualLengthNeighboursAreBothKept) {
  EXPECT_EQ(compact_llr_sequential(raw_of("aaaa")).entries,
            (Entries{{1, 3}, {2, 3}}));
}

TEST(ComputeFlags, Examples) {
  using Flags = std::vector<std::uint8_t>;
  EXPECT_EQ(compute_flags(kExampleRaw), (Flags{1, 0, 0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(compute_flags(RawLlrArray{{0, 0, 0}}), (Flags{0, 0, 0}));
  EXPECT_EQ(compute_flags(RawLlrArray{{3, 3, 2, 1}}), (Flags{1, 1, 0, 0}));
  EXPECT_EQ(compute_flags(RawLlrArray{{0, 2, 1}}), (Flags{0, 1, 0}));
  EXPECT_TRUE(compute_flags(RawLlrArray{}).empty());
}

TEST(PrefixSum, Examples) {
  using Flags = std::vector<std::uint8_t>;
  using Sums = std::vector<std::uint32_t>;
  EXPECT_EQ(prefix_sum(Flags{1, 0, 0, 1, 1, 0, 0, 1}),
            (Sums{1, 1, 1, 2, 3, 3, 3, 4}));
  EXPECT_TRUE(prefix_sum(Flags{}).empty());
  EXPECT_EQ(prefix_sum(Flags{1, 1, 0, 0}), (Sums{1, 2, 2, 2}));
}

TEST(ScatterCompact, FigureExample) {
  const auto flags = compute_flags(kExampleRaw);
  const auto sums = prefix_sum(flags);
  EXPECT_EQ(scatter_compact(kExampleRaw, flags, sums).entries,
            kExampleCompact);
  EXPECT_EQ(
      scatter_compact(kExampleRaw, flags, sums, ExecPolicy::parallel(3))
          .entries,
      kExampleCompact);
}

TEST(ScatterCompact, AllZeroFlags) {
  const RawLlrArray raw{{0, 0, 0}};
  const std::vector<std::uint8_t> flags{0, 0, 0};
  const std::vector<std::uint32_t> sums{0, 0, 0};
  EXPECT_TRUE(scatter_compact(raw, flags, sums).empty());
}

TEST(ScatterCompact, MississippiPipelineMatchesSequential) {
  const RawLlrArray raw = raw_of("mississippi");
  EXPECT_EQ(compact_llr_parallel(raw, ExecPolicy::parallel(4)).entries,
            compact_llr_sequential(raw).entries);
}

TEST(ScatterCompact, RejectsMismatchedScratch) {
  const std::vector<std::uint8_t> flags{1, 0};
  const std::vector<std::uint32_t> sums{1, 1};
  EXPECT_THROW((void)scatter_compact(kExampleRaw, flags, sums),
               std::invalid_argument);
}

// Every string over {a,b,c} up to length 12: the flag/scan/scatter
// pipeline equals the one-pass compaction.
TEST(CompactionEquivalence, ExhaustiveTernaryUpToTwelve) {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (const std::string& s : testing::all_strings(len, 3)) {
      const RawLlrArray raw = raw_of(s);
      const auto flags = compute_flags(raw);
      const auto sums = prefix_sum(flags);
      ASSERT_EQ(scatter_compact(raw, flags, sums).entries,
                compact_llr_sequential(raw).entries)
          << s;
    }
  }
}

TEST(CompactionEquivalence, RandomWithWorkers) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::string s =
        testing::random_string(rng, 1 + rng() % 12, 1 + rng() % 3);
    const RawLlrArray raw = raw_of(s);
    const unsigned workers = 1 + rng() % 8;
    ASSERT_EQ(compact_llr_parallel(raw, ExecPolicy::parallel(workers)).entries,
              compact_llr_sequential(raw).entries)
        << s;
  }
}

class LlrInvariants : public ::testing::TestWithParam<std::size_t> {};

TEST_P(LlrInvariants, HoldOnRandomTexts) {
  const std::size_t alphabet = GetParam();
  std::mt19937_64 rng(100 + alphabet);
  for (int iter = 0; iter < 600; ++iter) {
    const std::string s =
        testing::random_string(rng, 1 + rng() % 48, alphabet);
    const Text t(s);
    const RawLlrArray raw = raw_of(s);
    const std::size_t n = raw.size();

    for (Position i = 1; i < n; ++i) {
      ASSERT_LE(raw.at(i), raw.at(i + 1) + 1) << s;
      ASSERT_LE(raw.at(i), n - i + 1) << s;
    }

    const auto& e = compact_llr_sequential(raw).entries;
    for (std::size_t a = 1; a < e.size(); ++a) {
      ASSERT_LT(e[a - 1].start, e[a].start) << s;
      ASSERT_LT(e[a - 1].end(), e[a].end()) << s;
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = 0; b < e.size(); ++b) {
        if (a == b) continue;
        const bool contained =
            e[b].start <= e[a].start && e[a].end() <= e[b].end();
        ASSERT_FALSE(contained) << s;
      }
    }

    // Kept entries are exactly the LLRs not contained in another LLR.
    ASSERT_EQ(e, testing::useful_by_containment(raw)) << s;

    // Completeness: every raw LLR lies inside some compact entry.
    for (Position i = 1; i <= n; ++i) {
      if (raw.at(i) == 0) continue;
      const LlrEntry r{i, raw.at(i)};
      const bool inside = std::any_of(e.begin(), e.end(), [&](const LlrEntry& c) {
        return c.start <= r.start && r.end() <= c.end();
      });
      ASSERT_TRUE(inside) << s << " i=" << i;
    }

    // Each entry is a repeat whose one-character right extension is not.
    for (const LlrEntry& c : e) {
      ASSERT_TRUE(oracle::is_repeat(t, c.start, c.length)) << s;
      if (c.end() < n) {
        ASSERT_FALSE(oracle::is_repeat(t, c.start, c.length + 1)) << s;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Alphabets, LlrInvariants,
                         ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace repeatscan
