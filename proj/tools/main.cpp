#include <iostream>
#include <string>
#include <vector>

#include "qround/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qround::run_cli(args, std::cin, std::cout, std::cerr);
}
