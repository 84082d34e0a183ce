#include <iostream>
#include <string>
#include <vector>

#include "coinc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return coinc::cli::run(args, std::cout, std::cerr);
}
