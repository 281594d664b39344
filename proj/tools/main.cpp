#include <iostream>

#include "chainsim/cli.hpp"

int main(int argc, char** argv) {
  return chainsim::cli::main(argc, argv, std::cout, std::cerr);
}
