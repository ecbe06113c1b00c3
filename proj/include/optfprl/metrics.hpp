#pragma once

#include <optional>
#include <vector>

#include "optfprl/regularizers.hpp"
#include "optfprl/vec.hpp"

namespace optfprl {

struct SlotRecord {
  Vec x;
  double loss = 0.0;
  double comparator_loss = 0.0;
  double epsilon = 0.0;
  double sigma_t = 0.0;
  double sigma_cum = 0.0;
  double state_norm = 0.0;
  bool pruned = false;
  std::optional<double> delta_t;
};

// Per-slot log of one run plus the comparator sequence it is measured against.
struct Trace {
  std::vector<SlotRecord> slots;
  std::vector<Vec> comparators;
  double radius = 0.0;  // feasible-set radius of the run

  long horizon() const { return static_cast<long>(slots.size()); }
};

// sum_t loss(x_t) - loss(u_t)
double dynamic_regret(const Trace& trace);

// sum_{t<T} ||u_{t+1} - u_t||
double path_length(const std::vector<Vec>& comparators);

struct EnergyHybrid {
  double energy = 0.0;  // sum eps_t^2
  double hybrid = 0.0;  // sum_{t<T} eps_t * ||u_{t+1} - u_t||
};
EnergyHybrid pred_energy_and_hybrid(const Trace& trace);

// Penalty accumulated by downward moves of sqrt(E_t / (2R + P_t)); zero when
// that ratio is non-decreasing or the comparator never moves.
double corrective_term(const Trace& trace);

// Right-hand side of the regret guarantee matching the schedule, evaluated
// from the trace's measured quantities.
double regret_bound(const Trace& trace, const StrategyConfig& strategy);

struct MetricsReport {
  double regret_cum = 0.0;
  double path_len = 0.0;
  double energy = 0.0;
  double hybrid = 0.0;
  double corrective = 0.0;
  std::optional<double> bound_value;
  bool bound_satisfied = true;  // regret_cum <= bound + 1e-6 when a bound applies
};

MetricsReport compute_metrics(const Trace& trace, const StrategyConfig* strategy);

}  // namespace optfprl
