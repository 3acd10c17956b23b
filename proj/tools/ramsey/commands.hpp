#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

enum ExitCode { ok = 0, input_error = 2, budget_exceeded = 3, verification_failed = 4 };

/// Runs one command line (without the program name). The JSON report goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramsey::cli
