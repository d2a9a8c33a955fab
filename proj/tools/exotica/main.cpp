#include "exotica/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return exotica::cli::run(argc, argv, std::cout, std::cerr);
}
