// Release gate: runs the eleven acceptance criteria and prints one
// pass/fail line each.  Exits nonzero if any criterion fails.

#include <cstdio>

#include "isingq/verify.hpp"

int main() {
  bool all_pass = true;
  for (const auto& c : isingq::run_acceptance()) {
    std::printf("criterion %2d [%s] %s (%.1fs)\n", c.index, c.pass ? "PASS" : "FAIL",
                c.title.c_str(), c.seconds);
    if (!c.pass) {
      all_pass = false;
      for (const auto& check : c.checks) {
        if (!check.pass) {
          std::printf("    FAIL %s: measured=%.6e tolerance=%.6e\n", check.name.c_str(),
                      check.measured, check.tolerance);
        }
      }
    }
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all_pass ? 0 : 1;
}
