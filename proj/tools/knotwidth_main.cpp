// knotwidth command-line entry point.

#include <iostream>
#include <string>
#include <vector>

#include "knotwidth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return knotwidth::cli::run(std::move(args), std::cout, std::cerr);
}
