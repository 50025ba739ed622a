// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphopt {

/// Runs the command line front end on `args` (without the program name). Output is
/// buffered and written to `out` once. Exit codes: 0 yes/success, 1 no, 2 parse error,
/// 3 resource or limit, 4 invalid parameters, 5 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphopt
