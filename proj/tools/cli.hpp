#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stepup::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_io = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Growth table for the given bit lengths, CSV with a header row.
std::string growth_table(const std::vector<int>& bit_lengths);

} // namespace stepup::cli
