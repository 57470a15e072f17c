#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppdiv::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kValidationFailure = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppdiv::cli
