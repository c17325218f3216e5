#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bu {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;   // property or validation failure
inline constexpr int kExitInvalid = 2;  // bad invocation or input

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bu
