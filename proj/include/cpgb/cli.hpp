#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpgb {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitDegenerate = 3,
  kExitNumerical = 4,
};

/// Entry point of the `cpgb` tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpgb
