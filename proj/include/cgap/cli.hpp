#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cgap::cli {

// Runs one command (argv without the program name) and writes structured
// output to `out`, diagnostics to `err`.  Exit codes: 0 success, 1 invalid
// input, 2 numerical/convergence failure, 3 bound violation found by
// random-test.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgap::cli
