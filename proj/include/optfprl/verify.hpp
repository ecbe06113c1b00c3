#pragma once

#include <string>
#include <vector>

namespace optfprl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The eight acceptance checks (run by `optfprl verify` and by the acceptance
// test binary):
//   1 perfect-prediction collapse (zero regret, zero state)
//   2 state-norm bound on all scenarios and random instances
//   3 regret <= schedule bound on random instances, all four schedules
//   4 recursive-schedule ceiling delta_{1:t} <= 2*sqrt(3)*R*sqrt(E_t)
//   5 iterates match the dense grid oracle on small instances
//   6 qualitative average-regret orderings across the six scenarios
//   7 hybrid-term and corrective-term identities on constructed sequences
//   8 byte-identical CSV on repeated runs
std::vector<CheckResult> run_acceptance_checks(bool parallel = true);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace optfprl
