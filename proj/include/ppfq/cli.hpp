#pragma once

#include <iosfwd>

namespace ppfq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitGuardError = 3;

/// Runs one subcommand; the report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ppfq
