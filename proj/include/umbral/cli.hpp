#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace umbral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitGuardViolation = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
