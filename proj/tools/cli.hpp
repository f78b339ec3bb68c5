#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitViolation = 3,
  kExitSearchSpace = 4,
};

// args excludes the program name. Subcommands: gen, eval, dynamics, exact,
// check, verify. Reports go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcg::cli
