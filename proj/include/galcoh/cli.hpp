#pragma once

#include <iosfwd>

namespace galcoh {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitInput = 2, kExitBudget = 3 };

/// Entry point shared by the galcoh binary and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galcoh
