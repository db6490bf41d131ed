#include <iostream>

#include "projlab/cli.hpp"

int main(int argc, char** argv) {
  return projlab::cli::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
