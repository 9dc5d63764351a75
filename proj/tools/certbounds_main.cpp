#include <iostream>
#include <string>
#include <vector>

#include "certbounds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return certbounds::cli_run(args, std::cout, std::cerr);
}
