#include <iostream>
#include <string>
#include <vector>

#include "fattail/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fattail::cli::run(args, std::cout, std::cerr);
}
