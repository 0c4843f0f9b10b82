#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sslab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInequalityFailure = 1;
inline constexpr int kExitError = 2;

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sslab
