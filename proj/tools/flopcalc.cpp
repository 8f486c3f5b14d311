#include <iostream>

#include "flopcalc/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flopcalc::cli::run(args, std::cout, std::cerr);
}
