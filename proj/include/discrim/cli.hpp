#pragma once
// Command-line surface. run() is the whole program minus process plumbing:
// it parses arguments, executes one subcommand, writes to the given streams
// (or to --out), and returns the process exit code, so tests can drive the
// CLI in-process.
//
// Exit codes: 0 success; 2 input error (bad flags, malformed scenario,
// unknown population name, invalid cost); 3 domain error (unequal skill
// distributions); 4 I/O error (unreadable scenario, unwritable output).

#include <iosfwd>

namespace discrim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;
inline constexpr int kExitIoError = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace discrim::cli
