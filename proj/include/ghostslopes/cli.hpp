#pragma once

// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 usage or
// validation error, 3 certification failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace ghostslopes::cli {

inline constexpr const char* version = "0.1.0";

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, certification_failed = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghostslopes::cli
