#pragma once

#include <iosfwd>

namespace zeck {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;      // bad input, or a verification that failed
inline constexpr int kExitBudgetExhausted = 2;  // a verdict was required but the solver gave up

// Entry point behind the `zeck` executable. Writes results to `out` (or to
// --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zeck
