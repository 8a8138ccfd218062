#include <iostream>
#include <string>
#include <vector>

#include "fibsearch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fibsearch::cli::run(args, std::cout, std::cerr);
}
