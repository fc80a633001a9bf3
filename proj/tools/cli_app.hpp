#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vsdo::cli {

// Runs one invocation of the command-line tool. `args` excludes the program
// name. Exit codes: 0 ok, 1 verification failure, 2 usage or runtime error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vsdo::cli
