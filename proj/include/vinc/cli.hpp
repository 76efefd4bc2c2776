#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vinc {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 a law check failed, 2 usage, parse or guard error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace vinc
