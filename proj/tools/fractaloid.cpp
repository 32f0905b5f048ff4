#include <iostream>
#include <string>
#include <vector>

#include "fractaloid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fractaloid::cli::run_cli(args, std::cout, std::cerr);
}
