#include <iostream>
#include <string>
#include <vector>

#include "arrpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return arrpair::run_cli(args, std::cout, std::cerr);
}
