#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ultra {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Results go to files
/// named by --out or to `out`; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ultra
