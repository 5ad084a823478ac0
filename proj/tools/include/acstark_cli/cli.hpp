#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace acstark::cli {

enum ExitCode : int { kOk = 0, kToleranceViolation = 1, kBadInput = 2, kIoError = 3 };

// Name of the environment variable that redirects every output file into a
// directory, keeping the file names chosen by flags or defaults.
inline constexpr const char* kOutputDirEnv = "ACSTARK_OUTPUT_DIR";

// Runs the tool with `args` (without the program name). Human-readable text
// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acstark::cli
