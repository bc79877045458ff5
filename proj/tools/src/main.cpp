#include <iostream>
#include <string>
#include <vector>

#include "sphtopo_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sphtopo::cli::run(args, std::cout, std::cerr);
}
