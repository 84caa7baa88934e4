#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wlcovers {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitAffirmative = 0,  // success / equivalent / isomorphic / verified
  kExitNegative = 1,     // negative verdict
  kExitError = 2,        // usage or IO error
};

/// Runs one CLI invocation; `args` excludes the program name. The worker
/// count for gen-covers comes from the WLCOVERS_WORKERS environment variable.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wlcovers
