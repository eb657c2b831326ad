#include <iostream>
#include <string>
#include <vector>

#include "fibpart/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return fibpart::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
