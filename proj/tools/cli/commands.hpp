#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padebary::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitInvalid = 3;

/// Runs the command line `args` (args[0] is the program name). Never throws;
/// every failure is reported on `err` and mapped to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padebary::cli
