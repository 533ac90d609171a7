#include <iostream>

#include "quintic/cli.hpp"

int main(int argc, char** argv) {
  return quintic::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
