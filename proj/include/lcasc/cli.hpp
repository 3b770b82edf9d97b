#ifndef LCASC_CLI_HPP
#define LCASC_CLI_HPP

#include <iosfwd>

namespace lcasc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

/// Entry point of the `lcasc` tool: gen | solve | probe | estimate | bench.
/// Returns 0 on success, 1 on usage errors, 2 on unreadable instances,
/// infeasible parameters and invalid covers.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcasc

#endif  // LCASC_CLI_HPP
