#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superosc::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command line (without the program name). Tables go to `out`
/// (or to --out PATH), diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superosc::cli
