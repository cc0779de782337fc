#include <cstdlib>
#include <iostream>

#include "curvegen/testing/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : curvegen::testing::run_acceptance()) {
    std::cout << curvegen::testing::format_line(r) << "\n";
    failed += !r.passed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
