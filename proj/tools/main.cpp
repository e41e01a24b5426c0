#include <iostream>
#include <string>
#include <vector>

#include "twistspin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return twistspin::run_cli(args, std::cout, std::cerr);
}
