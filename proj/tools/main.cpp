#include <iostream>
#include <string>
#include <vector>

#include "influence_cost_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return influence_cost::cli::dispatch(args, std::cout, std::cerr);
}
