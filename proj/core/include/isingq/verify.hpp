#pragma once

// Named verification suites and the acceptance runner.  Every check
// reports the measured number next to its pinned tolerance so reports are
// auditable; the acceptance runner groups the suites into the eleven
// release criteria.

#include <cstdint>
#include <string>
#include <vector>

namespace isingq {

enum class VerifyGeometry { Tiny, Small };

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<std::string> verify_suite_names();

// Throws std::invalid_argument on an unknown suite name.
std::vector<CheckResult> run_verify_suite(const std::string& suite, VerifyGeometry geometry,
                                          std::uint64_t seed);
std::vector<CheckResult> run_verify_all(VerifyGeometry geometry, std::uint64_t seed);

struct CriterionResult {
  int index = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<CheckResult> checks;
};

// The eleven release criteria at full (small) geometry, fixed seed.
std::vector<CriterionResult> run_acceptance();

}  // namespace isingq
