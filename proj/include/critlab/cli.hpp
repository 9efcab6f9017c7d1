#pragma once

#include <iosfwd>

namespace critlab::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kUsage = 2 };

/// Entry point of the `critlab` tool. `in`/`out` stand in for stdin/stdout unless
/// --input/--output redirect them.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace critlab::cli
