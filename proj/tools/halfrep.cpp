#include <iostream>
#include <string>
#include <vector>

#include "halfrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return halfrep::cli::run(args, std::cout, std::cerr);
}
