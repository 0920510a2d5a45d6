#ifndef PERIODS_CLI_COMMANDS_HPP
#define PERIODS_CLI_COMMANDS_HPP

#include <iosfwd>

namespace periods::cli {

// Exit codes of periods_lab.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitUnsupportedDomain = 3,
    kExitNumeric = 4,
};

// Entry point of periods_lab with subcommands verify, elliptic and reduce.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace periods::cli

#endif
