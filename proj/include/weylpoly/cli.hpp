#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylpoly {

// Runs the weylpoly command line against the given argument list (without
// the program name). Returns the process exit status: 0 on success, 1 on a
// verification failure or oracle disagreement, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylpoly
