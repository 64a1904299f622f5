#include <iostream>
#include <vector>

#include "weylpoly/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return weylpoly::run_cli(args, std::cout, std::cerr);
}
