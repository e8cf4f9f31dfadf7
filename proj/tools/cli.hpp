#ifndef USO_TOOLS_CLI_HPP
#define USO_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace uso::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // check failed or invariant violated
inline constexpr int kExitUsage = 2;    // bad arguments or malformed input

// Runs `usopath <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace uso::cli

#endif  // USO_TOOLS_CLI_HPP
