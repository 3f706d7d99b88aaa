#include <iostream>
#include <string>
#include <vector>

#include "monoid_ramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monoid_ramsey::run_cli(args, std::cout, std::cerr);
}
