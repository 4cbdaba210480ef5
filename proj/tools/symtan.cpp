#include <iostream>

#include "symtan/cli.hpp"

int main(int argc, char** argv) {
  return symtan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
