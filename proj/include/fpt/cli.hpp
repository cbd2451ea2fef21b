#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpt {

// Entire command-line tool as a pure-ish function: `args` excludes the
// program name; all normal output goes to `out`, diagnostics to `err`; the
// return value is the process exit code. Keeping the real main() a two-line
// wrapper makes every CLI behavior unit-testable in-process.
//
// Exit codes: 0 success; for `dominates` 0/1/2 = dominates / does not /
// undecidable by the implemented criteria; 64 bad input, 65 resource caps
// or table horizons, 70 internal error; CLI11 parse failures keep their
// conventional codes >= 100 so they never collide with the verdict codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpt
