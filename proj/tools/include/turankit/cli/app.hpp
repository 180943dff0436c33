#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace turankit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // math or infrastructure error
  kExitBadArgs = 2,
  kExitViolation = 3,   // counterexample, failed claim or nonzero residual
};

/// Runs one command line (args[0] is the subcommand, not the program name).
/// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "1..20", "1..5,8,10" in ascending order without duplicates.
/// Throws std::invalid_argument on malformed lists.
std::vector<std::size_t> parse_index_list(const std::string& text);

}  // namespace turankit::cli
