#include <iostream>

#include "gradeforge/cli.hpp"

int main(int argc, char** argv) {
  return gradeforge::cli::run(argc, argv, std::cout, std::cerr);
}
