#include <iostream>

#include "turan_forge/cli.hpp"

int main(int argc, char** argv) {
  return turan_forge::cli::run(argc, argv, std::cout, std::cerr);
}
