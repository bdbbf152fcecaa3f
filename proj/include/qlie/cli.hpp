#ifndef QLIE_CLI_HPP
#define QLIE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qlie/report.hpp"

namespace qlie {

enum ExitCode : int {
    kExitPass = 0,
    kExitFail = 1,
    kExitParse = 2,
    kExitInternal = 3,
};

struct CommandResult {
    int exit_code = kExitPass;
    Report report;
};

/// Runs one command line (args excludes the program name). The rendered
/// report goes to `out`, diagnostics to `err`.
CommandResult run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qlie

#endif
