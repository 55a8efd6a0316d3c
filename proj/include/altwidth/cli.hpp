#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altwidth {

// Drives the full command-line surface. args excludes the program name.
// Returns the process exit code: 0 success, 1 verification failure or
// unreachable target, 2 usage/parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace altwidth
