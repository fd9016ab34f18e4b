#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtree::cli {

/// Runs one invocation. `args` excludes the program name. Returns the exit
/// status: 0 on success, 1 on input errors, 2 when certify meets a nonzero
/// obstruction.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wtree::cli
