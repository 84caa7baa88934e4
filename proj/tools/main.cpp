#include <iostream>
#include <string>
#include <vector>

#include "wlcovers/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wlcovers::dispatch(args, std::cout, std::cerr);
}
