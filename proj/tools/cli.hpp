#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtsp::cli {

/// Exit codes of the gtsp_colony tool.
enum ExitCode : int {
    kSuccess = 0,
    kDataError = 1,   // I/O, parse, capacity or configuration failure
    kUsageError = 2,  // bad flags or values
};

/// Runs the tool with `args` (excluding the program name). Normal output goes
/// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtsp::cli
