#include <iostream>

#include "weyldual/cli.hpp"

int main(int argc, char** argv) {
  return weyldual::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
