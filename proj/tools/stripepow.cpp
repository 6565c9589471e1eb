#include <iostream>
#include <string>
#include <vector>

#include "stripepow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return stripepow::cli::run(args, std::cout, std::cerr);
}
