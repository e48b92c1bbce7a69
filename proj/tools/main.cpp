#include <iostream>
#include <string>
#include <vector>

#include "planegraph/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return planegraph::cli::run(args, std::cout, std::cerr);
}
