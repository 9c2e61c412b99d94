#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sliring/error.hpp"

namespace sliring::cli {

// Process exit statuses. Every error class has its own code.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kParse = 3,
  kSliFailure = 4,
  kBasisMismatch = 5,
  kNoInverse = 6,
  kIo = 7,
  kDomain = 8,
  kInternal = 9,
};

int exit_code_for(ErrorKind kind) noexcept;

// Runs one command line (args[0] is the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sliring::cli
