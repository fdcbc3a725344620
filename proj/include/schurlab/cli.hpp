#ifndef SCHURLAB_CLI_HPP
#define SCHURLAB_CLI_HPP

#include <iosfwd>

namespace schurlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Parses argv and runs one subcommand, writing results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurlab

#endif  // SCHURLAB_CLI_HPP
