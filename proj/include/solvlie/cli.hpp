#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvlie {

/// Runs one CLI invocation.  `args` excludes the program name.  Reports are
/// written to `out` as pretty-printed JSON with stable key order; argument
/// parser usage/help text goes to the streams CLI11 picks.  Returns the
/// process exit code: 0 iff no check in the report failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace solvlie
