#include <iostream>

#include "discrim/cli.hpp"

int main(int argc, char** argv) {
  return discrim::cli::run(argc, argv, std::cout, std::cerr);
}
