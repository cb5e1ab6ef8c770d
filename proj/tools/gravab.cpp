#include <iostream>

#include "gravab/runner.hpp"

int main(int argc, char** argv) {
  const auto outcome = gravab::cli::run_command(argc - 1, argv + 1);
  std::cout << outcome.stdout_text;
  std::cerr << outcome.stderr_text;
  return outcome.exit_code;
}
