#include <iostream>

#include "isk4/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return isk4::cli::run(args, std::cin, std::cout, std::cerr);
}
