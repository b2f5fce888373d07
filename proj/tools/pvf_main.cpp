#include <iostream>
#include <string>
#include <vector>

#include "pvf/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pvf::cli::run(args, std::cout, std::cerr);
}
