#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::cli {

/// Parses `args` (without the program name), runs the subcommand and returns
/// the process exit code: 0 success, 1 verification or solver failure,
/// 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
