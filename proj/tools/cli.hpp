#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvnet::cli {

// Runs the command line given as argv-style tokens (program name excluded),
// writing results to `out` and diagnostics to `err`. Returns the process
// exit code: 0 success, 1 input error, 2 domain error, 3 internal error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace curvnet::cli
