#include <iostream>
#include <string>
#include <vector>

#include "gsaudit/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gsaudit::run_cli(args, std::cout, std::cerr);
}
