#include <iostream>
#include <string>
#include <vector>

#include "fuscat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fuscat::run(args, std::cout, std::cerr);
}
