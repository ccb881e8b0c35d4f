#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cograph::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // not a cograph, does not embed, oracle disagreement
    kUsage = 2,     // bad arguments or malformed input
    kBudget = 3,    // a bounded search gave up
};

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cograph::cli
