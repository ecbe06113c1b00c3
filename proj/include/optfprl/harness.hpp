#pragma once

#include <functional>
#include <string>
#include <vector>

#include "optfprl/baselines.hpp"
#include "optfprl/learner.hpp"
#include "optfprl/metrics.hpp"
#include "optfprl/scenarios.hpp"

namespace optfprl {

enum class Algo { optfprl, ftrl_adaptive, ogd_adaptive, optimistic_ftrl, optimistic_ogd };

const char* algo_name(Algo a);
bool algo_from_name(const std::string& name, Algo& out);

struct RunConfig {
  Scenario scenario;
  Algo algo = Algo::optfprl;
  StrategyConfig strategy;  // schedule selection; radius is taken from the scenario's set
  int prune_cadence = 1;
  bool check_invariants = true;
};

struct RunResult {
  Trace trace;
  MetricsReport report;
};

// Drives one learner through the scenario, recording the trace and asserting
// the runtime invariants (feasibility of every action; at prune cadence 1,
// ||p_{1:t}|| <= R*sigma_{1:t-1} + eps_t). An invariant violation throws with
// the slot and the violated inequality. Deterministic for a fixed config.
RunResult run_experiment(const RunConfig& config);

// Runs independent experiments, optionally across OpenMP threads; results are
// stored in config order either way, so both paths produce identical output.
std::vector<RunResult> run_batch(const std::vector<RunConfig>& configs, bool parallel);

// Dense scan of the set's bounding box at the given spacing, keeping feasible
// points only; ties break toward the lowest scan index. d <= 2. Throws if the
// spacing leaves fewer than 10 feasible points. `parallel` splits the scan
// across OpenMP threads (same result as the serial scan).
Vec grid_argmin_oracle(const std::function<double(const Vec&)>& objective, const FeasibleSet& set,
                       double resolution, bool parallel = false);

}  // namespace optfprl
