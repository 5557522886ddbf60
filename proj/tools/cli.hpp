#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohwit {

// Dispatches one command line. args excludes the program name. Results go
// to out (or the --out file), diagnostics to err. Exit codes: 0 success,
// 2 parse error, 3 validation error, 4 dimension or feasibility error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohwit
