#pragma once

#include <iosfwd>

namespace dowker::cli {

/// Exit status: 0 success, 1 hard error, 2 oracle/pipeline mismatch.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kMismatch = 2;

/// Runs one invocation of the command-line tool. Data goes to `out` or to
/// the files named by the flags; diagnostics and warnings go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dowker::cli
