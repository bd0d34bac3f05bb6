#include <iostream>

#include "qtp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qtp::run_cli(args, std::cout, std::cerr);
}
