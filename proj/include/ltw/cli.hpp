#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltw {

// Full command-line front end, callable in-process for tests. args excludes
// the program name. Exit codes: 0 feasible/valid, 1 infeasible/invalid,
// 2 resource budget exceeded, 64 usage error, 65 parse or validation error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ltw
