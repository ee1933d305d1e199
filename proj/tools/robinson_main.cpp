#include <iostream>
#include <string>
#include <vector>

#include "robinson/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return robinson::cli::run(args, std::cout, std::cerr);
}
