#include <iostream>

#include "phaselab/cli/commands.hpp"

int main(int argc, char** argv) {
  return phaselab::cli::main_entry({argv + 1, argv + argc}, std::cout, std::cerr);
}
