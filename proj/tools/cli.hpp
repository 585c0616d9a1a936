#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpcc::cli {

enum ExitCode : int {
  kCertified = 0,
  kUsageError = 1,
  kNumericError = 2,
  kNotCertified = 3,
};

// Runs the qpcc command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpcc::cli
