#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pappus::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, domain_error = 3 };

/// Runs the command line (args excludes the program name). Records go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pappus::cli
