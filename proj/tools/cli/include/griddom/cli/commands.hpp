#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace griddom::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    unsupported_shape = 2,
    improper = 3,
    timeout = 4,
};

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace griddom::cli
