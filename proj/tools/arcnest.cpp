#include <iostream>
#include <string>
#include <vector>

#include "arcnest/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return arcnest::run(args, std::cout, std::cerr);
}
