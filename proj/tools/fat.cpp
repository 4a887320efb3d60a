#include <iostream>
#include <string>
#include <vector>

#include "fat/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fat::cli::dispatch(std::move(args), std::cout, std::cerr);
}
