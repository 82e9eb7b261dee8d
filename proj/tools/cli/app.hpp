#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfp::cli {

/// Exit codes.
enum ExitCode : int { ok = 0, input_error = 1, domain_error = 2, invariant_error = 3 };

/// Runs the command line `args` (without the program name), writing records
/// to `out` and diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfp::cli
