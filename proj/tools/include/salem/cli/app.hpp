#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace salem::cli {

/// Process exit codes of the salem tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitZeroPolynomial = 3,
  kExitNotIsometry = 4,
  kExitNoConeWitness = 5,
  kExitReducible = 6,
  kExitTraceBelowThreshold = 7,
  kExitNotQuasiUnipotent = 8,
  kExitBoundExhausted = 9,
  kExitInternal = 10,
};

/// Runs the tool on argv-style arguments (without the program name).
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace salem::cli
