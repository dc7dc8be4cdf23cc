#include <iostream>
#include <string>
#include <vector>

#include "segre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return segre::run_cli(args, std::cout, std::cerr);
}
