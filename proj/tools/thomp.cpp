#include <iostream>

#include "thomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return thomp::run(args, std::cout, std::cerr);
}
