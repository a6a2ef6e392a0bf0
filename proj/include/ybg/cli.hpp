#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybg {

/// Runs one CLI command. Exit codes: 0 accepted/found/ok, 1 rejected/none/invalid,
/// 2 input or usage error. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybg
