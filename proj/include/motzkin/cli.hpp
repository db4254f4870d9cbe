#ifndef MOTZKIN_CLI_HPP
#define MOTZKIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace motzkin::cli {

/// Runs the command-line front end on the given arguments (without the
/// program name).  Returns the process exit code: 0 on success, 1 on a
/// verification failure, 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motzkin::cli

#endif
