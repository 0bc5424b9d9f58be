#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bicyclic::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageError = 2,    // unparseable arguments, unknown suite, element outside the family
  kFamilyError = 3,   // invalid or unsupported --family
  kRangeError = 4,    // endomorphism parameters out of range
  kIoError = 5,
  kOverflow = 6,
};

/// Runs one command line (without the program name). Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicyclic::cli
