#include <iostream>
#include <string>
#include <vector>

#include "cxkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cxkit::run(args, std::cout, std::cerr);
}
