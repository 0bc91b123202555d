#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sugawara::cli {

/// Exit codes: 0 every check passed, 1 a check failed, 2 usage or parse error.
enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs the command line; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sugawara::cli
