#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbra::cli {

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbra::cli
