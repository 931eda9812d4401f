#include <iostream>
#include <string>
#include <vector>

#include "report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finst::cli::run(args, std::cout, std::cerr);
}
