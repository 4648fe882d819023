#include <gtest/gtest.h>

#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "repeatscan/llr.hpp"
#include "repeatscan/parallel.hpp"
#include "repeatscan/suffix_structures.hpp"

namespace repeatscan {
namespace {

TEST(ExecPolicy, RejectsZeroWorkers) {
  EXPECT_THROW(ExecPolicy(ExecMode::parallel, 0), std::invalid_argument);
  EXPECT_EQ(ExecPolicy::sequential().effective_workers(), 1U);
  EXPECT_EQ(ExecPolicy(ExecMode::sequential, 9).effective_workers(), 1U);
  EXPECT_EQ(ExecPolicy::parallel(5).effective_workers(), 5U);
  EXPECT_GE(ExecPolicy::hardware().workers(), 1U);
}

TEST(ParallelFor, EmptyRangeIsNoop) {
  int calls = 0;
  parallel_for(5, 5, ExecPolicy::parallel(4), [&](std::size_t) { ++calls; });
  parallel_for(7, 3, ExecPolicy::parallel(4), [&](std::size_t) { ++calls; });
  EXPECT_EQ(calls, 0);
}

TEST(ParallelFor, EveryIndexExactlyOnce) {
  for (unsigned workers : {1U, 2U, 3U, 8U, 64U}) {
    for (std::size_t n : {1UL, 2UL, 7UL, 100UL, 1001UL}) {
      std::vector<std::atomic<int>> hits(n + 3);
      parallel_for(3, n + 3, ExecPolicy::parallel(workers),
                   [&](std::size_t i) { hits[i].fetch_add(1); });
      for (std::size_t i = 0; i < 3; ++i) ASSERT_EQ(hits[i].load(), 0);
      for (std::size_t i = 3; i < n + 3; ++i) {
        ASSERT_EQ(hits[i].load(), 1) << "workers=" << workers << " n=" << n;
      }
    }
  }
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(0, 100, ExecPolicy::parallel(4),
                            [](std::size_t i) {
                              if (i == 77) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(ParallelFor, RawLlrFillMatchesSequential) {
  const SuffixStructures s = build_suffix_structures(Text("mississippi"));
  const RawLlrArray seq = build_raw_llr(s, ExecPolicy::sequential());
  const RawLlrArray par = build_raw_llr(s, ExecPolicy::parallel(4));
  EXPECT_EQ(par.lengths, seq.lengths);
}

TEST(ParallelFor, FlagFillOfCompactionExample) {
  const RawLlrArray raw{{3, 2, 1, 1, 3, 2, 1, 1}};
  EXPECT_EQ(compute_flags(raw, ExecPolicy::parallel(8)),
            (std::vector<std::uint8_t>{1, 0, 0, 1, 1, 0, 0, 1}));
}

TEST(ParallelScan, CompactionExample) {
  const std::vector<std::uint8_t> flags{1, 0, 0, 1, 1, 0, 0, 1};
  const std::vector<std::uint32_t> want{1, 1, 1, 2, 3, 3, 3, 4};
  for (unsigned w : {1U, 2U, 3U, 8U}) {
    EXPECT_EQ(parallel_scan(std::span<const std::uint8_t>(flags),
                            ExecPolicy::parallel(w)),
              want);
  }
}

TEST(ParallelScan, Empty) {
  const std::vector<std::uint32_t> none;
  EXPECT_TRUE(parallel_scan(std::span<const std::uint32_t>(none),
                            ExecPolicy::parallel(4))
                  .empty());
}

TEST(ParallelScan, RandomBinaryArraysMatchSequentialSum) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::uint8_t> v(rng() % 1001);
    for (auto& x : v) x = rng() & 1U;
    std::vector<std::uint32_t> want(v.size());
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) want[i] = acc += v[i];
    for (unsigned w : {1U, 2U, 7U}) {
      ASSERT_EQ(parallel_scan(std::span<const std::uint8_t>(v),
                              ExecPolicy::parallel(w)),
                want);
    }
    ASSERT_EQ(parallel_scan(std::span<const std::uint8_t>(v),
                            ExecPolicy::sequential()),
              want);
  }
}

TEST(ParallelScan, WideValues) {
  std::vector<std::uint32_t> v(10000);
  std::iota(v.begin(), v.end(), 1U);
  const auto got =
      parallel_scan(std::span<const std::uint32_t>(v), ExecPolicy::parallel(6));
  EXPECT_EQ(got.back(), 10000U * 10001U / 2U);
  EXPECT_EQ(got, parallel_scan(std::span<const std::uint32_t>(v),
                               ExecPolicy::sequential()));
}

}  // namespace
}  // namespace repeatscan
