#ifndef PACKDENSE_TOOLS_CLI_HPP
#define PACKDENSE_TOOLS_CLI_HPP

#include <ostream>

namespace packdense::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // theorem FAIL, oracle mismatch, runtime error
  kUsage = 2,         // bad arguments, refused caps
  kInconclusive = 3,  // INCONCLUSIVE verdicts but no FAIL
};

/// Entry point of the `packdense` tool; writes results to `out` and
/// diagnostics to `err`. Subcommands: table, cseq, alphabeta, verify, oracle, count.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace packdense::cli

#endif  // PACKDENSE_TOOLS_CLI_HPP
