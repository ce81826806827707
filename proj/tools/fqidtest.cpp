#include <iostream>

#include "fqid/cli.hpp"

int main(int argc, char** argv) {
  return fqid::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
