#include <iostream>

#include "hka/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hka::cli::run(args, std::cout, std::cerr);
}
