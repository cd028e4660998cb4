#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neron::cli {

enum ExitCode : int {
    ok = 0,              // criterion holds / operation succeeded
    fails = 1,           // criterion fails / not disciplined
    invalid_input = 2,
    internal_error = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace neron::cli
