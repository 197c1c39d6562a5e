#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fhtw {

enum ExitCode { kExitOk = 0, kExitError = 1, kExitNo = 2, kExitInconclusive = 3 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fhtw
