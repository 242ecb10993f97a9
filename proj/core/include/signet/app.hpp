#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signet {

/// Full CLI dispatch: args exclude the program name. Returns the process
/// exit code: 0 success, 1 usage, 2 parse/validation, 3 numerical failure or
/// cap exceeded, 4 internal soundness violation.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signet
