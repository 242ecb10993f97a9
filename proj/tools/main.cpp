#include <iostream>
#include <vector>

#include "signet/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return signet::run_command(args, std::cout, std::cerr);
}
