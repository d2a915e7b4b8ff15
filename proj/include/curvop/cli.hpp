#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvop {

// Command dispatch for the curvop tool. `args` excludes the program name.
// Exit codes: 0 success, 1 oracle suite failure, 2 input validation,
// 3 usage, 4 numerical non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvop
