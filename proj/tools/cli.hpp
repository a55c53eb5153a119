#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace paretail::cli {

/// Runs one command line (without the program name). Exit codes: 0 ok,
/// 1 verify rate mismatch, 2 usage or invalid input, 3 moment does not exist,
/// 4 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paretail::cli
