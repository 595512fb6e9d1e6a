#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace farey::cli {

/// Exit codes: 0 decided true / success, 1 decided false, 2 usage or input
/// error, 3 internal inconsistency between two deciders.
enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kInconsistent = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
