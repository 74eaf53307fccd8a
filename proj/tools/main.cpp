#include <iostream>
#include <string>
#include <vector>

#include "cycorbit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cycorbit::cli::run(args, std::cout, std::cerr);
}
