#include <exception>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  try {
    const auto result = nagell::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "nagell: internal error: " << e.what() << '\n';
    return nagell::cli::kMismatch;
  }
}
