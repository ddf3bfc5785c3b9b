#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moduli_euler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;

/// Environment variable holding a default truncation order.
inline constexpr const char* kOrderEnvVar = "MODULI_EULER_ORDER";

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moduli_euler::cli
