#include <iostream>
#include <vector>

#include "mpk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpk::cli::run(args, std::cout, std::cerr);
}
