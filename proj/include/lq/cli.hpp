#ifndef LQ_CLI_HPP
#define LQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,          // success or mathematical confirmation
  kRefuted = 1,     // mathematical refutation (ordering fails, no ordering exists, not chordal)
  kUsage = 2,       // bad flags or malformed input
  kMismatch = 3,    // `repro` did not reproduce the recorded outcome
};

/// Runs the `lq` front end. `args` excludes the program name. Reads `-`
/// file arguments from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace lq::cli

#endif  // LQ_CLI_HPP
