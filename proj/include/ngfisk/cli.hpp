#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngfisk::cli {

/// Runs one command line (args[0] is the program name) and returns the
/// process exit status: 0 on success, 1 when an error record was emitted,
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngfisk::cli
