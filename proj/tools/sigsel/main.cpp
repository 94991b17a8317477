#include <iostream>

#include "sigsel/cli.hpp"

int main(int argc, char** argv) {
  return sigsel::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
