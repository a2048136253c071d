#include <iostream>
#include <string>
#include <vector>

#include "frolov/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return frolov::cli::run(args, std::cout, std::cerr);
}
