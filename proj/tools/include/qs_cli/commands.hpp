#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qs::cli {

enum ExitCode : int { Ok = 0, CheckFailed = 1, UsageError = 2 };

// Runs the `qs` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qs::cli
