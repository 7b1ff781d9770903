#pragma once

#include <string>
#include <vector>

namespace cellar {

struct CliResult {
  int exit_code = 0;
  std::string json;   // stable report (sorted keys)
  std::string human;  // rendering of the same report
};

// Exit codes: 0 computed/verified, 1 verification failed or NOT-CELLULAR,
// 2 input error, 3 resource cap exceeded.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace cellar
