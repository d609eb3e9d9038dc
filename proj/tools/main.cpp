#include <iostream>
#include <string>
#include <vector>

#include "cnotperm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cnotperm::run_cli(args, std::cout, std::cerr);
}
