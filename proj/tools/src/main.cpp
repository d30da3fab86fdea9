#include <iostream>

#include "salem/cli/app.hpp"

int main(int argc, char** argv) {
  return salem::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
