#include <unistd.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "coxcubes/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string stdin_text;
  if (!isatty(fileno(stdin))) {
    std::ostringstream os;
    os << std::cin.rdbuf();
    stdin_text = os.str();
  }
  coxcubes::cli::RunResult result = coxcubes::cli::run_command(args, stdin_text);
  (result.status == 0 ? std::cout : std::cerr) << result.output;
  return result.status;
}
