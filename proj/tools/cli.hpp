#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsumset::cli {

// Exit statuses shared by every subcommand.
enum Exit : int {
    kOk = 0,
    kMathFailure = 1,
    kParseError = 2,
    kHypothesis = 3,
    kResourceGuard = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rsumset::cli
