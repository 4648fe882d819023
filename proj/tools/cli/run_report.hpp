#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "repeatscan/lr_query.hpp"
#include "repeatscan/parallel.hpp"
#include "repeatscan/text.hpp"

namespace repeatscan::cli {

/// Wall-clock milliseconds per pipeline stage.
struct StageTimes {
  double build_ms = 0;       ///< SA, rank and LCP construction
  double raw_llr_ms = 0;     ///< raw LLR array
  double compaction_ms = 0;  ///< flag/scan/scatter or sequential pass
  double query_ms = 0;       ///< per-position walks
};

/// One benchmark configuration and its averaged stage times.
struct RunReport {
  std::string dataset;
  std::size_t n = 0;
  std::size_t sigma = 0;
  QueryMode mode = QueryMode::leftmost;
  LlrPath path = LlrPath::raw;
  ExecMode exec = ExecMode::sequential;
  unsigned workers = 1;
  unsigned runs = 1;
  bool include_build = false;
  StageTimes times;
  std::uint64_t positions_with_repeat = 0;
  long peak_rss_kib = 0;

  /// Sum of LLR, compaction and query time, plus construction when
  /// include_build is set. I/O is never included.
  [[nodiscard]] double total_ms() const noexcept;
};

/// Runs the pipeline `runs` times and averages each stage.
RunReport run_benchmark(const Text& text, std::string dataset, QueryMode mode,
                        LlrPath path, const ExecPolicy& policy, unsigned runs,
                        bool include_build);

/// Line-oriented key=value rendering of a report.
void write_report(std::ostream& out, const RunReport& report);

const char* to_string(QueryMode mode) noexcept;
const char* to_string(LlrPath path) noexcept;
const char* to_string(ExecMode mode) noexcept;

/// Peak resident set size of this process in KiB, or 0 if unavailable.
long peak_rss_kib() noexcept;

}  // namespace repeatscan::cli
