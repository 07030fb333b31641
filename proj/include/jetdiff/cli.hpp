#pragma once

#include <ostream>
#include <string>

namespace jetdiff {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParameter = 2,
  kExitFloorAmbiguous = 3,
  kExitStatistical = 4,
};

/// Runs the `jetdiff` command line; the JSON report goes to `out`,
/// diagnostics to `err`. Default precision comes from JETDIFF_DIGITS.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jetdiff
