#include <iostream>
#include <string>
#include <vector>

#include "coxkl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coxkl::run(args, std::cout, std::cerr);
}
