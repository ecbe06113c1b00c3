// Acceptance suite: runs every gate check and prints one PASS/FAIL line per
// criterion. Exit code 0 iff all pass.
#include <cstdio>

#include "optfprl/verify.hpp"

int main() {
  const std::vector<optfprl::CheckResult> results = optfprl::run_acceptance_checks();
  for (const optfprl::CheckResult& r : results)
    std::printf("%s  criterion %s  (%s)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
  const bool ok = optfprl::all_pass(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
