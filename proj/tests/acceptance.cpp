// Acceptance gate: runs every criterion and prints one pass/fail line each.

#include <iostream>

#include "polyfaces/verify.hpp"

int main() {
  auto results = polyfaces::run_acceptance_suite("all");
  bool ok = polyfaces::report_acceptance(results, std::cout);
  std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
            << std::endl;
  return ok ? 0 : 1;
}
