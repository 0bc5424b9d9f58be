#include <iostream>

#include "bicyclic/verify.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  bicyclic::assert_registry_complete();
  std::vector<std::string> args(argv + 1, argv + argc);
  return bicyclic::cli::run(args, std::cout, std::cerr);
}
