#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minell {

/// Run one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 success, 1 malformed input, 2 graph not negative definite,
/// 3 reach target unreachable.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace minell
