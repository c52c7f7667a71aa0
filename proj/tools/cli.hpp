#pragma once

#include <ostream>

namespace subdiv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

/// Runs one command line. Reports go to `out` (or to --out files), messages to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace subdiv::cli
