#ifndef LIEALG_CLI_HPP
#define LIEALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace liealg::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kPropertyFails = 1,
    kUsage = 2,
    kMalformedInput = 3,
};

/// Runs one command line (without the program name). Human summaries go to
/// out, or the JSON report with --porcelain; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liealg::cli

#endif // LIEALG_CLI_HPP
