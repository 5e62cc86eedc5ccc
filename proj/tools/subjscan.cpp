#include <iostream>

#include "subjscan/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return subjscan::run_cli(args, std::cout, std::cerr);
}
