// Acceptance suite: one pass/fail line per exit criterion.

#include <iostream>

#include "metrotrade/verify/checks.hpp"

int main() {
  using namespace metrotrade::verify;
  const VerifyOptions options;
  const auto outcomes = run_checks(acceptance_checks(), options);
  std::cout << format_report(outcomes);
  return all_passed(outcomes) ? 0 : 1;
}
