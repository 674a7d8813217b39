#include <iostream>

#include "hyperoct/cli.hpp"

int main(int argc, char** argv) {
  return hyperoct::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
