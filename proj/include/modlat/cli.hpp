#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modlat::cli {

/// Process exit codes of the `modlat` tool.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,           // unexpected failure, including unwritable output files
  kUsage = 2,              // bad flags, unreadable or malformed files, wrong message length
  kSetupFailed = 3,        // setup rejected every sampled candidate
  kIssuanceExhausted = 4,  // master key reached its issuance bound
  kParameterMismatch = 5,  // artifacts produced under different params
  kBudgetExceeded = 6,     // enumeration larger than the configured budget
  kOperationFailed = 7,    // H1, extraction or encryption ran out of retries
};

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modlat::cli
