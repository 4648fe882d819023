#include "cli/run_report.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "repeatscan/llr.hpp"
#include "repeatscan/suffix_structures.hpp"

namespace repeatscan::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

template <typename Answers>
std::uint64_t count_leftmost(const Answers& answers) {
  std::uint64_t c = 0;
  for (const auto& a : answers) c += a.exists ? 1 : 0;
  return c;
}

template <typename Answers>
std::uint64_t count_all(const Answers& answers) {
  std::uint64_t c = 0;
  for (const auto& a : answers) c += a.empty() ? 0 : 1;
  return c;
}

}  // namespace

double RunReport::total_ms() const noexcept {
  const double core = times.raw_llr_ms + times.compaction_ms + times.query_ms;
  return include_build ? core + times.build_ms : core;
}

RunReport run_benchmark(const Text& text, std::string dataset, QueryMode mode,
                        LlrPath path, const ExecPolicy& policy, unsigned runs,
                        bool include_build) {
  if (runs == 0) throw std::invalid_argument("bench: runs must be >= 1");
  RunReport report;
  report.dataset = std::move(dataset);
  report.n = text.size();
  report.sigma = text.sigma();
  report.mode = mode;
  report.path = path;
  report.exec = policy.mode();
  report.workers = policy.effective_workers();
  report.runs = runs;
  report.include_build = include_build;

  const PositionRange range = PositionRange::whole(text.size());
  for (unsigned r = 0; r < runs; ++r) {
    auto t = Clock::now();
    const SuffixStructures s = build_suffix_structures(text);
    report.times.build_ms += elapsed_ms(t);

    t = Clock::now();
    const RawLlrArray raw = build_raw_llr(s, policy);
    report.times.raw_llr_ms += elapsed_ms(t);

    std::uint64_t answered = 0;
    if (path == LlrPath::raw) {
      t = Clock::now();
      if (mode == QueryMode::leftmost) {
        answered = count_leftmost(leftmost_positions(raw, range, policy));
      } else {
        answered = count_all(all_lr_positions(raw, range, policy));
      }
      report.times.query_ms += elapsed_ms(t);
    } else {
      t = Clock::now();
      const CompactLlrArray compact = policy.mode() == ExecMode::sequential
                                          ? compact_llr_sequential(raw)
                                          : compact_llr_parallel(raw, policy);
      report.times.compaction_ms += elapsed_ms(t);
      t = Clock::now();
      if (mode == QueryMode::leftmost) {
        answered = count_leftmost(leftmost_positions(compact, range, policy));
      } else {
        answered = count_all(all_lr_positions(compact, range, policy));
      }
      report.times.query_ms += elapsed_ms(t);
    }
    report.positions_with_repeat = answered;
  }

  const double div = runs;
  report.times.build_ms /= div;
  report.times.raw_llr_ms /= div;
  report.times.compaction_ms /= div;
  report.times.query_ms /= div;
  report.peak_rss_kib = peak_rss_kib();
  return report;
}

void write_report(std::ostream& out, const RunReport& r) {
  out << "dataset=" << r.dataset << '\n'
      << "n=" << r.n << '\n'
      << "sigma=" << r.sigma << '\n'
      << "mode=" << to_string(r.mode) << '\n'
      << "path=" << to_string(r.path) << '\n'
      << "exec=" << to_string(r.exec) << '\n'
      << "workers=" << r.workers << '\n'
      << "runs=" << r.runs << '\n'
      << "include_build=" << (r.include_build ? "true" : "false") << '\n'
      << "build_ms=" << fixed3(r.times.build_ms) << '\n'
      << "raw_llr_ms=" << fixed3(r.times.raw_llr_ms) << '\n'
      << "compaction_ms=" << fixed3(r.times.compaction_ms) << '\n'
      << "query_ms=" << fixed3(r.times.query_ms) << '\n'
      << "total_ms=" << fixed3(r.total_ms()) << '\n'
      << "positions_with_repeat=" << r.positions_with_repeat << '\n'
      << "peak_rss_kib=" << r.peak_rss_kib << '\n';
}

const char* to_string(QueryMode mode) noexcept {
  return mode == QueryMode::leftmost ? "leftmost" : "all";
}

const char* to_string(LlrPath path) noexcept {
  return path == LlrPath::raw ? "raw" : "compact";
}

const char* to_string(ExecMode mode) noexcept {
  return mode == ExecMode::sequential ? "seq" : "par";
}

long peak_rss_kib() noexcept {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return 0;
  return usage.ru_maxrss;  // KiB on Linux
}

}  // namespace repeatscan::cli
