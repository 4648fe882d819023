#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "cli/input.hpp"
#include "cli/output_format.hpp"
#include "cli/run_report.hpp"
#include "repeatscan/llr.hpp"
#include "repeatscan/lr_query.hpp"
#include "repeatscan/oracle.hpp"
#include "repeatscan/suffix_structures.hpp"
#include "repeatscan/walk_stats.hpp"

namespace repeatscan::cli {

namespace {

struct Options {
  std::string input;
  QueryMode mode = QueryMode::leftmost;
  LlrPath path = LlrPath::raw;
  ExecMode exec = ExecMode::sequential;
  std::optional<unsigned> threads;
  std::optional<Position> pos;
  std::string range;
  std::string output;
  bool chomp = false;
  bool include_build = false;
  bool verify = false;
  unsigned runs = 1;
  std::size_t oracle_cap = oracle::kDefaultSizeCap;
};

// Runtime failure with a message for the user.
struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned parse_worker_count(const std::string& s, const char* source) {
  unsigned v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v == 0) {
    throw CommandError(std::string("invalid worker count '") + s + "' from " +
                       source + " (expected an integer >= 1)");
  }
  return v;
}

// Environment beats the flag, the flag beats hardware concurrency.
ExecPolicy resolve_policy(const Options& o) {
  if (o.exec == ExecMode::sequential) return ExecPolicy::sequential();
  unsigned workers = o.threads.value_or(hardware_workers());
  if (const char* env = std::getenv(kThreadsEnv); env && *env) {
    workers = parse_worker_count(env, kThreadsEnv);
  }
  return ExecPolicy::parallel(workers);
}

Position parse_position(const std::string& s) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() ||
      v > 0xffffffffULL) {
    throw CommandError("invalid position '" + s + "'");
  }
  return static_cast<Position>(v);
}

PositionRange resolve_range(const Options& o, std::size_t n) {
  PositionRange range = PositionRange::whole(n);
  if (o.pos) {
    range = {*o.pos, *o.pos};
  } else if (!o.range.empty()) {
    const auto colon = o.range.find(':');
    if (colon == std::string::npos) {
      throw CommandError("invalid --range '" + o.range + "' (expected A:B)");
    }
    range = {parse_position(o.range.substr(0, colon)),
             parse_position(o.range.substr(colon + 1))};
    if (range.first > range.last) {
      throw CommandError("invalid --range '" + o.range + "' (A > B)");
    }
  } else {
    return range;
  }
  if (range.first < 1 || range.last > n) {
    throw CommandError("position out of range: [" +
                       std::to_string(range.first) + ", " +
                       std::to_string(range.last) + "] not within [1, " +
                       std::to_string(n) + "]");
  }
  return range;
}

SuffixStructures build_checked(const Text& text, const Options& o) {
  SuffixStructures s = build_suffix_structures(text);
  if (o.verify && !verify_suffix_structures(text, s)) {
    throw CommandError("suffix structure self-check failed");
  }
  return s;
}

CompactLlrArray compact_for(const RawLlrArray& raw, const ExecPolicy& policy) {
  return policy.mode() == ExecMode::sequential
             ? compact_llr_sequential(raw)
             : compact_llr_parallel(raw, policy);
}

// Opens --output if given; otherwise writes to `fallback`.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw CommandError("cannot open output file: " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }
  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) {
      throw CommandError("failed writing output" +
                         (path.empty() ? std::string() : ": " + path));
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_query(const Options& o, std::ostream& out) {
  const Text text = read_text_file(o.input, o.chomp);
  const PositionRange range = resolve_range(o, text.size());
  const ExecPolicy policy = resolve_policy(o);
  OutputTarget target(o.output, out);

  PositionAnswers answers;
  answers.mode = o.mode;
  answers.range = range;
  if (range.size() > 0) {
    const SuffixStructures s = build_checked(text, o);
    const RawLlrArray raw = build_raw_llr(s, policy);
    if (o.path == LlrPath::raw) {
      if (o.mode == QueryMode::leftmost) {
        answers.leftmost = leftmost_positions(raw, range, policy);
      } else {
        answers.all = all_lr_positions(raw, range, policy);
      }
    } else {
      const CompactLlrArray compact = compact_for(raw, policy);
      if (o.mode == QueryMode::leftmost) {
        answers.leftmost = leftmost_positions(compact, range, policy);
      } else {
        answers.all = all_lr_positions(compact, range, policy);
      }
    }
  }
  write_answers(target.stream(), answers);
  target.finish(o.output);
  return 0;
}

void write_stats_rows(std::ostream& out, const WalkStats& st) {
  char avg[32];
  std::snprintf(avg, sizeof avg, "%.2f", st.average());
  const char* name = to_string(st.path);
  out << name << "\tminimum\t" << st.min_steps << '\n'
      << name << "\tmaximum\t" << st.max_steps << '\n'
      << name << "\taverage\t" << avg << '\n';
}

int cmd_stats(const Options& o, std::ostream& out) {
  const Text text = read_text_file(o.input, o.chomp);
  const ExecPolicy policy = resolve_policy(o);
  OutputTarget target(o.output, out);
  std::ostream& os = target.stream();

  const SuffixStructures s = build_checked(text, o);
  const RawLlrArray raw = build_raw_llr(s, policy);
  const CompactLlrArray compact = compact_for(raw, policy);
  const WalkStats raw_stats = compute_walk_stats(raw);
  const WalkStats compact_stats = compute_walk_stats(compact);

  os << "# walk steps per position with a longest repeat: n=" << text.size()
     << " positions=" << raw_stats.positions
     << " compact_entries=" << compact.size() << '\n';
  if (raw_stats.positions == 0) os << "# no repeats\n";
  os << "llr_array\tstatistic\tsteps\n";
  write_stats_rows(os, raw_stats);
  write_stats_rows(os, compact_stats);
  target.finish(o.output);
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Text text = read_text_file(o.input, o.chomp);
  const ExecPolicy policy = resolve_policy(o);
  OutputTarget target(o.output, out);
  if (o.verify) build_checked(text, o);
  const RunReport report =
      run_benchmark(text, std::filesystem::path(o.input).filename().string(),
                    o.mode, o.path, policy, o.runs, o.include_build);
  write_report(target.stream(), report);
  target.finish(o.output);
  return 0;
}

// Compares every pipeline variant with the brute-force oracle.
int cmd_selftest(const Options& o, std::ostream& out) {
  const Text text = read_text_file(o.input, o.chomp);
  if (text.size() > o.oracle_cap) {
    throw CommandError("oracle size cap exceeded: n=" +
                       std::to_string(text.size()) + " > cap " +
                       std::to_string(o.oracle_cap));
  }
  const std::size_t n = text.size();
  const ExecPolicy par = o.exec == ExecMode::parallel
                             ? resolve_policy(o)
                             : ExecPolicy::parallel(std::max(4U, hardware_workers()));
  OutputTarget target(o.output, out);
  std::ostream& os = target.stream();
  bool ok = true;
  auto report = [&](const std::string& name, std::size_t mismatches) {
    os << (mismatches == 0 ? "ok     " : "FAILED ") << name;
    if (mismatches != 0) os << " (" << mismatches << " mismatches)";
    os << '\n';
    ok = ok && mismatches == 0;
  };

  const SuffixStructures s = build_suffix_structures(text);
  const SuffixStructures expected_s = oracle::suffix_structures(text);
  report("suffix structures verify", verify_suffix_structures(text, s) ? 0 : 1);
  report("suffix structures match oracle",
         (s.sa == expected_s.sa && s.rank == expected_s.rank &&
          s.lcp == expected_s.lcp)
             ? 0
             : 1);

  const RawLlrArray raw = build_raw_llr(s);
  std::size_t bad = 0;
  for (Position i = 1; i <= n; ++i) {
    bad += oracle::llr(text, i).length == raw.at(i) ? 0 : 1;
  }
  report("raw llr lengths", bad);

  std::vector<LrAnswerSet> truth(n);
  for (Position k = 1; k <= n; ++k) truth[k - 1] = oracle::all_lr(text, k);

  for (const ExecPolicy& policy : {ExecPolicy::sequential(), par}) {
    for (LlrPath path : {LlrPath::raw, LlrPath::compact}) {
      for (QueryMode mode : {QueryMode::leftmost, QueryMode::all}) {
        const PositionAnswers got = all_positions(text, mode, path, policy);
        std::size_t mismatches = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (mode == QueryMode::leftmost) {
            const LrAnswer want = truth[j].empty()
                                      ? LrAnswer::none()
                                      : LrAnswer::of(truth[j].front());
            mismatches += got.leftmost[j] == want ? 0 : 1;
          } else {
            mismatches += got.all[j] == truth[j] ? 0 : 1;
          }
        }
        report(std::string("query mode=") + to_string(mode) +
                   " path=" + to_string(path) +
                   " exec=" + to_string(policy.mode()) +
                   " workers=" + std::to_string(policy.effective_workers()),
               mismatches);
      }
    }
  }
  os << (ok ? "selftest passed" : "selftest FAILED") << " (n=" << n << ")\n";
  target.finish(o.output);
  return ok ? 0 : 1;
}

void add_input_options(CLI::App* cmd, Options& o) {
  static const std::map<std::string, QueryMode> modes{
      {"leftmost", QueryMode::leftmost}, {"all", QueryMode::all}};
  static const std::map<std::string, LlrPath> paths{
      {"raw", LlrPath::raw}, {"compact", LlrPath::compact}};
  static const std::map<std::string, ExecMode> execs{
      {"seq", ExecMode::sequential}, {"par", ExecMode::parallel}};

  cmd->add_option("file", o.input, "Input text file (raw bytes)")->required();
  cmd->add_option("--mode", o.mode, "leftmost | all")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  cmd->add_option("--path", o.path, "raw | compact")
      ->transform(CLI::CheckedTransformer(paths, CLI::ignore_case));
  cmd->add_option("--exec", o.exec, "seq | par")
      ->transform(CLI::CheckedTransformer(execs, CLI::ignore_case));
  cmd->add_option("--threads", o.threads,
                  std::string("Worker count for --exec par (") + kThreadsEnv +
                      " overrides)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", o.output, "Write results to PATH");
  cmd->add_flag("--chomp", o.chomp, "Strip one trailing newline from input");
  cmd->add_flag("--verify", o.verify,
                "Check the suffix structures by direct comparison");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Longest repeat of every text position via LLR arrays",
               "repeatscan"};
  app.require_subcommand(1);

  CLI::App* query = app.add_subcommand("query", "Longest repeat per position");
  add_input_options(query, o);
  auto* pos = query->add_option("--pos", o.pos, "Query a single position K");
  query->add_option("--range", o.range, "Query positions A:B (inclusive)")
      ->excludes(pos);

  CLI::App* stats =
      app.add_subcommand("stats", "Walk-step statistics, raw vs compact");
  add_input_options(stats, o);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Compare every variant with brute force");
  add_input_options(selftest, o);
  selftest->add_option("--oracle-cap", o.oracle_cap,
                       "Largest input accepted by the oracle");

  CLI::App* bench = app.add_subcommand("bench", "Timed run, key=value report");
  add_input_options(bench, o);
  bench->add_flag("--include-build", o.include_build,
                  "Count suffix structure construction in total_ms");
  bench->add_option("--runs", o.runs, "Runs to average")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (query->parsed()) return cmd_query(o, out);
    if (stats->parsed()) return cmd_stats(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
    return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "repeatscan: error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace repeatscan::cli
