#pragma once

#include <string>
#include <vector>

namespace braidfrac {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// argv[0] is the program name. Subcommands: sign, compare, mul, inv,
/// normalize, project, realize, axioms. Never throws.
CliResult run_cli(const std::vector<std::string>& argv);

}  // namespace braidfrac
