#include <iostream>

#include "ramanujan/cli.hpp"

int main(int argc, char** argv) {
  return ramanujan::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
