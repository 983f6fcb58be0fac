#include <iostream>
#include <string>
#include <vector>

#include "eqchoose/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eqchoose::RunCli(args, std::cout, std::cerr);
}
