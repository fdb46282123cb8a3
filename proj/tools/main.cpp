#include <iostream>
#include <string>
#include <vector>

#include "ffnets/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ffnets::run_cli(args, std::cout, std::cerr);
}
