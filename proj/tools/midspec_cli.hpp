#ifndef MIDSPEC_CLI_HPP
#define MIDSPEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace midspec {

/// Exit codes shared by every command.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,     // bad parameters or internal error
    kExitFailed = 2,    // a verification failed or the search ran out of budget
};

/// Runs one midspec invocation; args excludes the program name. Output that
/// a script would consume goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace midspec

#endif  // MIDSPEC_CLI_HPP
