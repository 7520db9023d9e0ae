#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "lq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return lq::cli::run(args, std::cout, std::cerr, std::cin);
  } catch (const std::exception& e) {
    std::cerr << "lq: internal error: " << e.what() << '\n';
    return lq::cli::kMismatch;
  }
}
