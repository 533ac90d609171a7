#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2 };

/// Runs one command line (without the program name). The JSON report goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
