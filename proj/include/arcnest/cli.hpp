#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arcnest {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGuard = 2;
inline constexpr int kExitConsistency = 3;

// Runs the tool with `args` (program name excluded). Caps not given as flags
// are read from ARCNEST_ORACLE_CAP, ARCNEST_STATE_CAP, ARCNEST_DIMENSION_CAP
// and ARCNEST_THREADS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcnest
