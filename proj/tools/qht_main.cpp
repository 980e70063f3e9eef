#include <iostream>
#include <string>
#include <vector>

#include "qht/cli_runner.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qht::run_cli(args, std::cout, std::cerr);
}
