#ifndef MVOP_CLI_HPP
#define MVOP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mvop {

// Runs one command-line invocation (argv without the program name) and
// writes the report to `out`.  Exit codes: 0 all checks pass, 1 a check
// failed or the computation broke, 2 invalid or non-generic parameters,
// 3 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvop

#endif
