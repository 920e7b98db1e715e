#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = torus2::cli::run_args(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
