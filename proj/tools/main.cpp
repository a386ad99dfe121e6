#include <iostream>

#include "smcnets/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  smcnets::cli::Result r = smcnets::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.status;
}
