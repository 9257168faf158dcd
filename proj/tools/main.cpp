#include <iostream>

#include "cpgb/cli.hpp"

int main(int argc, char** argv) {
  return cpgb::run_cli({argv, argv + argc}, std::cout, std::cerr);
}
