#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyctri::cli {

/// Runs one CLI invocation (args exclude the program name).
/// Exit codes: 0 success, 1 usage or input error, 2 negative verification
/// verdict under --strict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cyctri::cli
