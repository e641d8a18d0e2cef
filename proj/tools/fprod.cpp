#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "fprod/cli.hpp"

int main(int argc, char** argv) {
  fprod::cli::Options options;
  options.color = ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  return fprod::cli::run({argv, argv + argc}, std::cout, std::cerr, options);
}
