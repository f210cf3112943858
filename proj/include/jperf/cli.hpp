#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jperf::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kNoConvergence = 2 };

/// Runs the command line (args excludes the program name). Results go to
/// `out`; error records (one JSON object per line) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jperf::cli
