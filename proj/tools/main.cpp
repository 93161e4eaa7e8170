#include <iostream>

#include "fanohost/cli.hpp"

int main(int argc, char** argv) {
  return fano::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
