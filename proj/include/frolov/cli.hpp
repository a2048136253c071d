#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frolov::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Runs `frolov <generate|wce|compare|bound> ...`. args[0] is the program
/// name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frolov::cli
