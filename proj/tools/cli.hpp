#ifndef RISKAX_TOOLS_CLI_HPP
#define RISKAX_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace riskax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riskax::cli

#endif  // RISKAX_TOOLS_CLI_HPP
