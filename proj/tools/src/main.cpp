#include <iostream>

#include "fcover_tools/commands.hpp"

int main(int argc, char** argv) {
  return fcover::cli::run(argc, argv, std::cout, std::cerr);
}
