#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arrcd::cli {

/// Runs one command. args excludes the program name. Returns the exit status:
/// 0 success, 1 unreadable input or bad command line, 2 validation failure,
/// 3 internal consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arrcd::cli
