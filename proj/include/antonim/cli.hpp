#pragma once

#include <iosfwd>

namespace antonim::cli {

enum ExitCode : int {
  ok = 0,
  mismatch = 1,  // a verification found a disagreement
  usage = 2,     // bad arguments or invalid game state
};

/// Runs the `antonim` command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace antonim::cli
