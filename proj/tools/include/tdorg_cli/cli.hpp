#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdorg::cli {

enum ExitCode : int {
  kAffirmative = 0,
  kNegative = 1,
  kUsage = 2,  // usage, parse and precondition errors
  kGuard = 3,
  kInternal = 4,  // a self-check failed
};

/// Runs one invocation; `args` excludes the program name. Input "-" reads from `in`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tdorg::cli
