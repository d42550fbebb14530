#ifndef ROUTELAB_CLI_HPP
#define ROUTELAB_CLI_HPP

#include <ostream>

namespace routelab {

// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the routelab command. Machine-readable output (JSON, tree
// edge lists, graph files) goes to `out`; human summaries and diagnostics go
// to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace routelab

#endif  // ROUTELAB_CLI_HPP
