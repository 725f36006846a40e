#ifndef PRIMEGALOIS_CLI_HPP
#define PRIMEGALOIS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace primegalois {

/// Runs the command-line tool on argv-style arguments (program name not
/// included).  Returns the process exit code: 0 success, 1 mathematical
/// failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace primegalois

#endif
