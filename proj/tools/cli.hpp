#pragma once

#include <string>
#include <vector>

namespace superchar::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs the command line given argv-style arguments (without the program
/// name).  Exit codes: 0 ok, 1 failed selftest, 2 parse error,
/// 3 violated mathematical precondition, 4 missing osp edge provider.
RunResult run(const std::vector<std::string>& args);

}  // namespace superchar::cli
