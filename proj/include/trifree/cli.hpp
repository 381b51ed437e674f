#pragma once

#include <iosfwd>

namespace trifree {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Parses argv and runs one subcommand. Output goes to `out` unless --out
/// names a file; diagnostics and usage text go to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace trifree
