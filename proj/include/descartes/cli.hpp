#pragma once

#include <ostream>

namespace descartes {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitImpossible = 3;
inline constexpr int kExitUnresolved = 4;

// Entry point of the `descartes` tool; output goes to `out` unless --out is
// given, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace descartes
