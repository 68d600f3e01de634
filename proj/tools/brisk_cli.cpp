#include <iostream>
#include <string>
#include <vector>

#include "brisk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return brisk::run(args, std::cout, std::cerr);
}
