#include <iostream>
#include <string>
#include <vector>

#include "lcva/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lcva::run_command(args, std::cout);
}
