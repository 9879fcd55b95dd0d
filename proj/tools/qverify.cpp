#include <iostream>

#include "qverify/cli.hpp"

int main(int argc, char** argv) {
  return qverify::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
