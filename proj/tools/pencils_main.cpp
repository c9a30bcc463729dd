#include <iostream>

#include "pencils/cli.hpp"

int main(int argc, char** argv) {
  return pencils::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
