#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace repeatscan {

enum class ExecMode { sequential, parallel };

/// How a data-parallel stage runs. `workers` is ignored in sequential mode.
class ExecPolicy {
 public:
  /// Throws std::invalid_argument when workers == 0.
  ExecPolicy(ExecMode mode, unsigned workers);

  static ExecPolicy sequential() { return {ExecMode::sequential, 1}; }
  static ExecPolicy parallel(unsigned workers) {
    return {ExecMode::parallel, workers};
  }
  /// Parallel with one worker per hardware thread.
  static ExecPolicy hardware();

  [[nodiscard]] ExecMode mode() const noexcept { return mode_; }
  [[nodiscard]] unsigned workers() const noexcept { return workers_; }

  /// Threads actually used: 1 when sequential.
  [[nodiscard]] unsigned effective_workers() const noexcept {
    return mode_ == ExecMode::sequential ? 1U : workers_;
  }

 private:
  ExecMode mode_;
  unsigned workers_;
};

/// Default worker count: std::thread::hardware_concurrency(), at least 1.
unsigned hardware_workers() noexcept;

namespace detail {

/// Splits [0, count) into at most `workers` contiguous chunks and runs
/// `chunk(begin, end)` on each, one thread per chunk. The calling thread
/// takes the first chunk. Rethrows the first exception raised by a chunk.
void run_chunks(std::size_t count, unsigned workers,
                const std::function<void(std::size_t, std::size_t)>& chunk);

}  // namespace detail

/// Calls body(i) exactly once for each i in [begin, end). The body must
/// write only to slot i and read only state that stays immutable for the
/// duration of the call; the outcome then matches sequential execution.
template <typename Body>
  requires std::invocable<Body&, std::size_t>
void parallel_for(std::size_t begin, std::size_t end, const ExecPolicy& policy,
                  Body&& body) {
  if (end <= begin) return;
  const unsigned workers = policy.effective_workers();
  if (workers == 1) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  detail::run_chunks(end - begin, workers,
                     [&](std::size_t lo, std::size_t hi) {
                       for (std::size_t i = begin + lo; i < begin + hi; ++i) {
                         body(i);
                       }
                     });
}

/// Inclusive prefix sum: out[i] = values[0] + ... + values[i]. Chunked
/// scan (per-chunk totals, scan of totals, per-chunk rescan with offset);
/// integer addition makes it bit-identical to a sequential scan.
template <std::integral T>
std::vector<std::uint32_t> parallel_scan(std::span<const T> values,
                                         const ExecPolicy& policy) {
  const std::size_t n = values.size();
  std::vector<std::uint32_t> out(n);
  if (n == 0) return out;

  const unsigned workers = policy.effective_workers();
  if (workers == 1 || n < 2 * static_cast<std::size_t>(workers)) {
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      acc += static_cast<std::uint32_t>(values[i]);
      out[i] = acc;
    }
    return out;
  }

  const std::size_t chunk = (n + workers - 1) / workers;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<std::uint32_t> totals(chunks, 0);

  detail::run_chunks(chunks, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      std::uint32_t acc = 0;
      const std::size_t stop = std::min(n, (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < stop; ++i) {
        acc += static_cast<std::uint32_t>(values[i]);
      }
      totals[c] = acc;
    }
  });

  // Exclusive scan of chunk totals; there are only `workers` of them.
  std::uint32_t carry = 0;
  for (auto& t : totals) carry += std::exchange(t, carry);

  detail::run_chunks(chunks, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t c = lo; c < hi; ++c) {
      std::uint32_t acc = totals[c];
      const std::size_t stop = std::min(n, (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < stop; ++i) {
        acc += static_cast<std::uint32_t>(values[i]);
        out[i] = acc;
      }
    }
  });
  return out;
}

}  // namespace repeatscan
