#include <iostream>

#include "yolk/cli.hpp"

int main(int argc, char** argv) {
  const auto result = yolk::cli::main_entry(argc, argv);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
