#include <iostream>

#include "polyprod/cli.hpp"

int main(int argc, char** argv) {
  return polyprod::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
