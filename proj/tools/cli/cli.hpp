#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altdes::cli {

/// Runs one invocation; `args` excludes the program name. Returns 0 when every
/// result passes, 1 on a failure or negative finding, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by `verify`.
const std::vector<std::string>& verify_targets();

}  // namespace altdes::cli
