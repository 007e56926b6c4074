#ifndef SUMFREE_TOOLS_CLI_HPP
#define SUMFREE_TOOLS_CLI_HPP

#include <ostream>

namespace sumfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (argv[0] is the program name), runs the subcommand and
/// writes its report to `out`. Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sumfree::cli

#endif  // SUMFREE_TOOLS_CLI_HPP
