#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinc::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidParameters = 2,
  kInconclusive = 3,
};

/// Run one invocation. args[0] is the program name. Reports go to `out`,
/// usage and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinc::cli
