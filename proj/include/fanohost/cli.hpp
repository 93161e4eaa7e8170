#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fano::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // obstruction found, construction uncertified, catalog mismatch
  kInvalidInput = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. JSON goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fano::cli
