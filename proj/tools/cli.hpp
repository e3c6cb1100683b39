#pragma once

#include <string>
#include <vector>

namespace coxalg::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs the command line (without the program name) and captures both
// streams. Exit codes: 0 success, 1 verification failure, 2 usage error.
RunResult run(const std::vector<std::string>& args);

}  // namespace coxalg::cli
