#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apsbench {

struct VerifyConfig {
  int max_n = 7;       // graph order cap for the oracle-equivalence suite
  int samples = 100;   // random graphs per suite
  int angle_sets = 5;  // angle assignments per graph
  int eig_max_n = 10;  // order cap for the eigenvalue bound suite
  int eig_samples = 30;
  uint64_t seed = 1;
  /// Test hook: expected cos(2 theta) as a function of (kappa, m). The
  /// decaying-exponential rule when null; a wrong rule here must make the
  /// angle-rule check fail.
  double (*angle_rule)(double kappa, double m) = nullptr;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace apsbench
