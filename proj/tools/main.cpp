#include <iostream>

#include "trimer/cli.hpp"

int main(int argc, char** argv) {
  return trimer::run_cli(argc, argv, std::cout, std::cerr);
}
