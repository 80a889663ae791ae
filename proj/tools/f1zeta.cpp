#include <iostream>
#include <string>
#include <vector>

#include "f1zeta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return f1zeta::cli::run(std::move(args), std::cout, std::cerr);
}
