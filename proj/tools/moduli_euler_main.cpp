#include <iostream>
#include <string>
#include <vector>

#include "moduli_euler/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return moduli_euler::cli::run(args, std::cout, std::cerr);
}
