#pragma once

#include <ostream>

namespace meshpoly {

enum ExitCode : int {
  kExitOk = 0,
  kExitCertificate = 1,
  kExitUsage = 2,
  kExitInconclusive = 3,
};

/// The meshpoly command line. Human-readable output goes to `out`, machine
/// artifacts to the --out file.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace meshpoly
