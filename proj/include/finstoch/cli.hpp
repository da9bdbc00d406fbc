#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finstoch::cli {

/** Exit codes of every subcommand. */
enum ExitCode : int
{
    ok = 0,          // true, feasible, success
    negative = 1,    // false, infeasible, not comparable
    usage_error = 2  // bad arguments or bad data
};

/**
 * Runs one command line (without the program name). Reports go to `out`,
 * diagnostics to `err`; output is a deterministic function of the inputs.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace finstoch::cli
