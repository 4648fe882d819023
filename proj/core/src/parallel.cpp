#include "repeatscan/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace repeatscan {

ExecPolicy::ExecPolicy(ExecMode mode, unsigned workers)
    : mode_(mode), workers_(workers) {
  if (workers_ == 0) {
    throw std::invalid_argument("ExecPolicy: worker count must be >= 1");
  }
}

ExecPolicy ExecPolicy::hardware() { return parallel(hardware_workers()); }

unsigned hardware_workers() noexcept {
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace detail {

void run_chunks(std::size_t count, unsigned workers,
                const std::function<void(std::size_t, std::size_t)>& chunk) {
  if (count == 0) return;
  const std::size_t parts = std::min<std::size_t>(workers, count);
  const std::size_t base = count / parts;
  const std::size_t extra = count % parts;
  auto bounds = [&](std::size_t p) {
    const std::size_t lo = p * base + std::min(p, extra);
    return std::pair{lo, lo + base + (p < extra ? 1 : 0)};
  };

  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto guarded = [&](std::size_t p) {
    try {
      const auto [lo, hi] = bounds(p);
      chunk(lo, hi);
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(parts - 1);
    for (std::size_t p = 1; p < parts; ++p) {
      threads.emplace_back(guarded, p);
    }
    guarded(0);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail
}  // namespace repeatscan
