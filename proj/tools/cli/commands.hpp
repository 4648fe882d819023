#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repeatscan::cli {

/// Environment variable that overrides --threads.
inline constexpr const char* kThreadsEnv = "REPEATSCAN_THREADS";

/// Parses `args` (without the program name) and executes one of the
/// `query`, `stats`, `selftest` or `bench` commands. Results go to `out`
/// (or --output), diagnostics to `err`. Returns the process exit status:
/// 0 on success, 1 on a runtime error or failed self-test, and the CLI
/// parser's code on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace repeatscan::cli
