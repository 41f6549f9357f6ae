#ifndef FEWNOMIAL_CLI_HPP
#define FEWNOMIAL_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fewnomial {

// Runs the command line (argv without the program name). Returns 0 on
// success, 1 on domain errors (typed error name on the error stream),
// 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace fewnomial

#endif
