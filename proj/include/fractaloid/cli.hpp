#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractaloid::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidGraph = 2,
  kLimitExceeded = 3,
};

inline constexpr const char* kSchemaVersion = "1";

/// Runs one command line (without the program name). Reports go to `out`
/// or to the --out file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fractaloid::cli
