#ifndef NCDISC_CLI_HPP
#define NCDISC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ncdisc {

// Runs one subcommand; args exclude the program name. Returns the process
// exit code: 0 success, 1 engine error or failed check, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace ncdisc

#endif
