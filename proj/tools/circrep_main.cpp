#include <iostream>
#include <string>
#include <vector>

#include "circrep/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return circrep::cli::run(args, std::cout, std::cerr);
}
