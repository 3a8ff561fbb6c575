#include <iostream>
#include <string>
#include <vector>

#include "kgraphic/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kgraphic::run_cli(args, std::cout, std::cerr);
}
