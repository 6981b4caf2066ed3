#ifndef CHARRIG_TOOLS_CLI_HPP
#define CHARRIG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace charrig::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMathFailure = 1;  // nonempty diff or violated condition
inline constexpr int kInputError = 2;
inline constexpr int kOracleIncomplete = 3;

// Runs one command line (without the program name). Output goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charrig::cli

#endif
