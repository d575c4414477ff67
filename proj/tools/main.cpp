#include <iostream>
#include <string>
#include <vector>

#include "logmut/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return logmut::cli::run(args, std::cout, std::cerr);
}
