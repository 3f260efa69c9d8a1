#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysect::cli {

enum ExitCode : int { success = 0, failure = 1, witness_found = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// the --report file or to `out`; diagnostics go to `err` only on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysect::cli
