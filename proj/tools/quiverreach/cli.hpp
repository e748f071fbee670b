#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverreach::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kNo = 1,  // boolean query answered "no"
    kUsage = 64,
    kParse = 65,
    kPrecondition = 66,
};

/// Runs the command line `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverreach::cli
