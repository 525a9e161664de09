#pragma once

#include <string>
#include <vector>

namespace malcev {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Output is collected
/// and returned rather than printed. Exit codes: 0 all checks passed,
/// 1 a verification failed, 2 malformed input, 3 internal inconsistency.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace malcev
