#include <iostream>
#include <string>
#include <vector>

#include "h1lat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return h1lat::run_command(args, std::cout, std::cerr);
}
