#include <iostream>

#include "respoles/cli.hpp"

int main(int argc, char** argv) {
  return respoles::run_cli(argc, argv, std::cout, std::cerr);
}
