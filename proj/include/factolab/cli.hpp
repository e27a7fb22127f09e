#pragma once

#include <iosfwd>

namespace factolab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitMismatch = 2;

/// Runs one subcommand. Reports go to `out`; errors go to `err` as a JSON
/// object. Fixture truncation: --k, then FACTOLAB_TRUNCATION_K, then 4.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace factolab::cli
