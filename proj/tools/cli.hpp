#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holo {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitNoRelation = 2,
  kExitParse = 3,
  kExitInvalid = 4,
  kExitInternal = 5,
};

/// Runs one command line (without the program name). Files named "-" are
/// read from `in`.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace holo
