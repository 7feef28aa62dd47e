#ifndef POLYPROD_CLI_HPP
#define POLYPROD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyprod::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInvalidParams = 2,
  kReductionFailed = 3,
  kOraclePrecondition = 4,
  kHochsterCeiling = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyprod::cli

#endif  // POLYPROD_CLI_HPP
