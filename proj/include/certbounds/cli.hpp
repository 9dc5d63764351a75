#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace certbounds {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitRejection = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line given as plain arguments (no program name).
/// Reports go to `out` or to the --out path; diagnostics go to `err`.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace certbounds
