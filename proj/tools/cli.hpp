// cli.hpp -- the `thue` command line

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thue::cli {

/// Exit codes. 2 marks a finding (square or counterexample), not a failure.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kFinding = 2,
    kDataError = 65,
    kUsage = 64,
    kIoError = 74,
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thue::cli
