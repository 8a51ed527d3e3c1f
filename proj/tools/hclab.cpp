#include <iostream>
#include <string>
#include <vector>

#include "hclab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hclab::cli::run(args, std::cout, std::cerr);
}
