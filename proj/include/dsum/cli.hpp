#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dsum::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInvalidInput = 2,
    kExhausted = 3,
};

/// Runs the tool on `args` (without the program name). `in` backs the
/// "verify -" form.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

} // namespace dsum::cli
