#ifndef FATPOINTS_CLI_HPP
#define FATPOINTS_CLI_HPP

// Command-line front end. run() takes the arguments after the program name
// and returns the process exit code:
//   0 success, 1 unexpected failure, 2 usage error, 3 precondition violated.

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpoints::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fatpoints::cli

#endif
