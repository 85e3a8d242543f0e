#include <iostream>
#include <string>
#include <vector>

#include "acmgate/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return acm::run(args, std::cout, std::cerr);
}
