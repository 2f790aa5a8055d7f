#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace invord::cli {

// Runs one CLI invocation. `args` excludes the program name.
// Exit status: 0 success, 1 mathematical failure (witness or certificate on
// stdout), 2 malformed input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace invord::cli
