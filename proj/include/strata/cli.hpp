#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strata::cli {

/// Runs one command line. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 negative decision or failed verification,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
