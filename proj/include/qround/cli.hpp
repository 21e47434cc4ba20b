#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qround/harness.hpp"

namespace qround {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Entry point of the tool; args[0] is the program name. "-" paths use in/out.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses a bench spec: `sweep alg|source|seeds|size <values...>` lines, '#' comments.
/// Seeds accept single values and ranges "a..b".
SweepSpec parse_sweep_spec(const std::string& text);

}  // namespace qround
