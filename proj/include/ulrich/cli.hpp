#pragma once

#include <iosfwd>

namespace ulrich {

/// Exit codes of ulrich-forge.
enum ExitCode : int {
  kExitOk = 0,
  kExitCertificationFailed = 1,
  kExitBadParameters = 2,
  kExitIoError = 3,
};

/// Entry point of the ulrich-forge command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ulrich
