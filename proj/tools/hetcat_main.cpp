#include <iostream>
#include <vector>

#include "hetcat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hetcat::run_cli(args, std::cout, std::cerr);
}
