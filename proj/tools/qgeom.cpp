#include <iostream>
#include <string>
#include <vector>

#include "qgeom/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return qgeom::cli::run(args, std::cout, std::cerr);
}
