#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qlrc/error.hpp"

namespace qlrc {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitConstruction = 3, kExitVerification = 4, kExitResource = 5 };

int exit_code_for(ErrorCode code);

/// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qlrc
