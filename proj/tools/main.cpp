#include <iostream>

#include "confcoh/cli.hpp"

int main(int argc, char** argv) {
  return confcoh::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
