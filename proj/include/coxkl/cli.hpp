#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxkl {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailure = 1,
  kExitInvalidInput = 2,
  kExitResourceLimit = 3,
};

// Runs one coxkl invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxkl
