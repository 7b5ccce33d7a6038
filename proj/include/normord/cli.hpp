#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normord::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  ok = 0,
  check_failed = 1,
  parse_error = 2,
  cap_exceeded = 3,
  oracle_mismatch = 4,
};

/// Runs the `normord` front end; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normord::cli
