#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meanlab::cli {

/// Runs one command line (args excludes the program name). Returns the exit
/// status: 0 ok, 1 property failed, 2 usage error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meanlab::cli
