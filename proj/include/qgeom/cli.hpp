#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgeom::cli {

enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kValidation = 2,
  kDimension = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qgeom::cli
