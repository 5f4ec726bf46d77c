#include <iostream>
#include <string>
#include <vector>

#include "sepcheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sepcheck::run_cli(args, std::cout, std::cerr);
}
