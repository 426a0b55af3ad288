#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperrank {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitDomain = 2, kExitCapacity = 3, kExitUsage = 64 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperrank
