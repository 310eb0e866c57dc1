#include <iostream>

#include "nonfree/cli.hpp"

int main(int argc, char** argv) {
  return nonfree::run_cli(argc, argv, std::cout, std::cerr, nonfree::workers_from_env());
}
