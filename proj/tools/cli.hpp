#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace topoidx::cli {

enum ExitCode : int { kOk = 0, kCounterexample = 1, kUsage = 2 };

// Runs one command line (args excludes the program name). Output that is not
// redirected with --out goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace topoidx::cli
