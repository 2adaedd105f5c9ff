#pragma once

#include <string>
#include <vector>

namespace wronsk {

struct CliResult {
    int exit_code; // 0 ok, 2 usage error, 3 verification failed
    std::string out;
    std::string err;
};

/// Runs one command-line invocation in process.  `args` excludes the program
/// name.  Never throws: every outcome is an exit code plus streams.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace wronsk
