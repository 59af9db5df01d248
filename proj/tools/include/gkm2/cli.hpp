#pragma once

#include <iosfwd>

namespace gkm2::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,       // validate: the graph fails the hypotheses
  kParseError = 2,    // bad arguments, unreadable or malformed input
  kPrecondition = 3,  // e.g. betti before stabilization, invalid graph for cohom
  kOracleMismatch = 4,
};

/// Runs one command line. argv[0] is the program name. Standard input is
/// read only for the path "-".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkm2::cli
