#include <cstring>
#include <iostream>

#include "hyperrank/acceptance.hpp"

int main(int argc, char** argv) {
  hyperrank::AcceptanceOptions opts;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick")) opts.quick = true;
    if (!std::strcmp(argv[i], "-v")) verbose = true;
  }
  return hyperrank::print_acceptance(hyperrank::run_acceptance(opts), std::cout, verbose) == 0 ? 0 : 1;
}
