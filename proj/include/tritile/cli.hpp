#pragma once

#include <iosfwd>

namespace tritile {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,     // bad flags, unreadable input, malformed documents
  kExitGeometry = 2,  // fork, dead end, no section, lemma violation
  kExitBudget = 3,    // window overflow or step budget exhausted
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tritile
