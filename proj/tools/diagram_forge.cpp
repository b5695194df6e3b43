#include <iostream>
#include <string>
#include <vector>

#include "diagram_forge/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diagram_forge::run(std::move(args), std::cout, std::cerr);
}
