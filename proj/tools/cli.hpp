#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdakit::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kPrecondition = 1,  // construction error, bad arguments
    kInvalid = 2,       // validation or decode failure
    kIo = 3,            // I/O or parse error
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdakit::cli
