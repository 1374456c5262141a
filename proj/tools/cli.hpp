#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace calab::cli {

/// Exit statuses of `calab`.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kUsage = 2,
  kRefused = 3,
};

/// Runs one command line (args excludes the program name). Reports go to
/// --out or `out`; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace calab::cli
