#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumsphere::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFalse = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

inline constexpr const char* kToolVersion = "sumsphere 0.1.0";

/// Runs one command line (without the program name) and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumsphere::cli
