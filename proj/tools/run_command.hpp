#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoiter::cli {

// Parses and executes one command-line invocation against the supplied
// streams.  Returns the process exit status:
//   0  success / all checks pass / no feasible instance,
//   1  usage, parse, or validation error,
//   2  a verification failed, no quasi-period was found, a feasible
//      identity instance exists, or a ledger residual is nonzero.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace geoiter::cli
