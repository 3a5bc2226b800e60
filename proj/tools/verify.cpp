#include <iostream>
#include <string>
#include <vector>

#include "geoverify/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return geoverify::verify_main(args, std::cout, std::cerr);
}
