#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pclean {

/// Runs one invocation; `args` excludes the program name. Returns 0 on
/// success, 1 when a counterexample was found, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pclean
