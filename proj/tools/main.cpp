#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto outcome = soft7::cli::run({argv + 1, argv + argc});
  std::cout << outcome.out << std::flush;
  std::cerr << outcome.err << std::flush;
  return outcome.exit_code;
}
