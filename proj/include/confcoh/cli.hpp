#ifndef CONFCOH_CLI_HPP
#define CONFCOH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace confcoh {

enum ExitCode : int { kExitOk = 0, kExitWarning = 1, kExitSpec = 2, kExitParse = 3 };

/// Runs the command line front end; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confcoh

#endif
