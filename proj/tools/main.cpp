#include <iostream>
#include <string>
#include <vector>

#include "lmc/cli.hpp"

int main(int argc, char** argv) {
  return lmc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
