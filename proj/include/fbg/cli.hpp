#ifndef FBG_CLI_HPP
#define FBG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fbg::cli {

enum ExitCode : int {
    Ok = 0,
    Failure = 1, ///< invalid model, failed check, or an operation that does not apply
    Usage = 2,
    InputError = 3, ///< unreadable file, malformed model, unknown graph
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fbg::cli

#endif
