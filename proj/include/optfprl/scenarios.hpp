#pragma once

#include <functional>
#include <string>
#include <vector>

#include "optfprl/geometry.hpp"
#include "optfprl/oracles.hpp"

namespace optfprl {

// Cost/prediction generators for one experiment. The six built-in scenarios
// are linear costs over the radius-2 ball in 16 dimensions (horizon 5000 by
// default), each coefficient vector a constant multiple of the all-ones
// vector:
//
//   1  -1 through slot 1000, then +1
//   2  -1 on [1,1000], [2000,2500], [3500,3750]; +1 otherwise
//   3  -1 on [1,1000], -5 on [2000,2500], -10 on [3500,3750]; +1 otherwise
//   4  alternates +1 / -1 every 50 slots
//   5  alternates +1 / -0.1 every 50 slots
//   6  costs as scenario 4; predictions c_t * (1 - 10/t)
//
// Scenarios 1-5 carry zero predictions. Predictions are defined one slot past
// the horizon (the learner composes the next prediction at the last slot).
struct Scenario {
  std::string id = "1";
  long horizon = 5000;
  int dim = 16;
  FeasibleSet set = FeasibleSet::ball(16, 2.0);
  std::function<CostSpec(long)> cost_at;             // t in [1, horizon]
  std::function<PredictionSpec(long)> prediction_at; // t in [1, horizon + 1]
  unsigned long long seed = 0;
};

// Coefficient value (per coordinate) of scenario `id` at slot t; throws for t
// outside [1, horizon].
CostSpec scenario_costs(int id, long t, long horizon = 5000, int dim = 16);
PredictionSpec scenario_prediction(int id, long t, int dim = 16);

Scenario make_scenario(int id, long horizon = 5000, int dim = 16, double radius = 2.0);

enum class PredictionMode { zero, perfect, noisy };

struct RandomInstanceConfig {
  unsigned long long seed = 0;
  long horizon = 200;
  int dim = 2;
  double radius = 2.0;
  double lipschitz = 1.0;  // cost vectors are uniform on the sphere of this radius
  PredictionMode pred_mode = PredictionMode::zero;
  double noise_scale = 0.0;  // prediction = cost + noise_scale * gaussian (noisy mode)
};

Scenario make_random_scenario(const RandomInstanceConfig& cfg);

// Per-slot cost minimizers u_t; requires linear costs.
std::vector<Vec> comparator_sequence(const Scenario& scenario);

}  // namespace optfprl
