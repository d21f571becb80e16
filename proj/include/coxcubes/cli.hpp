#pragma once

#include <string>
#include <vector>

namespace coxcubes::cli {

struct RunResult {
  int status = 0;  // 0 success, 1 domain failure, 2 usage error
  std::string output;
};

// Dispatches one command line (without the program name).  Commands that read
// composite objects take them from --input FILE, where "-" (the default)
// means the supplied stdin text.
RunResult run_command(const std::vector<std::string>& argv,
                      const std::string& stdin_text = "");

}  // namespace coxcubes::cli
