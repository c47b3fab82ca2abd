#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asf::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kCrossCheckFailure = 3;

/// Runs one command. args excludes the program name. The payload goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace asf::cli
