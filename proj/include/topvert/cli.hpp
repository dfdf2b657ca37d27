#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "topvert/half_exp.hpp"

namespace topvert {

/// Runs the command line `args` (without the program name). Reports go to
/// `out` or the --out file, diagnostics to `err`. Returns 0 when every
/// requested check passes, 1 when one fails and 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3", "-7/2" or "2.5"; throws std::invalid_argument unless a multiple of 1/2.
HalfExp parse_exponent(const std::string& text);

}  // namespace topvert
