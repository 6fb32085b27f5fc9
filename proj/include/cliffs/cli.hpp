#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffs {

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_resource = 3, exit_internal = 4 };

// Runs the command line (without the program name); returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffs
