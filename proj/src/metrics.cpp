#include "optfprl/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace optfprl {

namespace {
void check_aligned(const Trace& trace, const char* where) {
  if (trace.comparators.size() != trace.slots.size())
    throw std::invalid_argument(std::string(where) + ": comparators not aligned with the trace");
}
}  // namespace

double dynamic_regret(const Trace& trace) {
  double r = 0.0;
  for (const SlotRecord& s : trace.slots) r += s.loss - s.comparator_loss;
  return r;
}

double path_length(const std::vector<Vec>& comparators) {
  double p = 0.0;
  for (std::size_t t = 0; t + 1 < comparators.size(); ++t)
    p += dist(comparators[t + 1], comparators[t]);
  return p;
}

EnergyHybrid pred_energy_and_hybrid(const Trace& trace) {
  check_aligned(trace, "pred_energy_and_hybrid");
  EnergyHybrid out;
  const std::size_t T = trace.slots.size();
  for (std::size_t t = 0; t < T; ++t) {
    const double eps = trace.slots[t].epsilon;
    out.energy += eps * eps;
    if (t + 1 < T) out.hybrid += eps * dist(trace.comparators[t + 1], trace.comparators[t]);
  }
  return out;
}

double corrective_term(const Trace& trace) {
  check_aligned(trace, "corrective_term");
  const std::size_t T = trace.slots.size();
  if (T == 0) return 0.0;
  double energy = 0.0;
  double path_aug = 2.0 * trace.radius;
  double ratio_prev = 0.0;
  double drops = 0.0;  // running sum over the slots where the ratio decreased
  double a = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    const double eps = trace.slots[t].epsilon;
    energy += eps * eps;
    if (t >= 1) path_aug += dist(trace.comparators[t], trace.comparators[t - 1]);
    const double ratio = std::sqrt(energy / path_aug);
    if (t >= 1 && ratio_prev - ratio >= 0.0) drops += ratio_prev - ratio;
    ratio_prev = ratio;
    if (t + 1 < T) a += drops * dist(trace.comparators[t + 1], trace.comparators[t]);
  }
  return a;
}

double regret_bound(const Trace& trace, const StrategyConfig& strategy) {
  check_aligned(trace, "regret_bound");
  const double radius = trace.radius;
  const EnergyHybrid eh = pred_energy_and_hybrid(trace);
  const double path = path_length(trace.comparators);
  const double root_energy = std::sqrt(eh.energy);
  switch (strategy.kind) {
    case Strategy::agnostic:
      return (5.8 * radius + 0.5 * path) * root_energy + eh.hybrid;
    case Strategy::known_path:
      return (4.0 * std::sqrt(2.0 * radius * radius + path) + radius / 8.0 +
              std::sqrt(radius * path / 2.0)) *
                 root_energy +
             eh.hybrid;
    case Strategy::observed_path: {
      const double path_aug = 2.0 * radius + path;
      return 5.5 * std::sqrt(radius) * std::sqrt(eh.energy * path_aug) + eh.hybrid +
             std::sqrt(radius / 2.0) * corrective_term(trace);
    }
    case Strategy::recursive: {
      double delta_prefix = 0.0;
      double comparator_sum = 0.0;
      const std::size_t T = trace.slots.size();
      for (std::size_t t = 0; t < T; ++t) {
        if (!trace.slots[t].delta_t.has_value())
          throw std::invalid_argument("regret_bound: recursive bound needs delta terms");
        delta_prefix += *trace.slots[t].delta_t;
        if (t + 1 < T)
          comparator_sum +=
              delta_prefix * dist(trace.comparators[t + 1], trace.comparators[t]);
      }
      return 1.1 * delta_prefix + comparator_sum / (4.0 * radius) + eh.hybrid;
    }
  }
  throw std::logic_error("regret_bound: unknown strategy");
}

MetricsReport compute_metrics(const Trace& trace, const StrategyConfig* strategy) {
  MetricsReport rep;
  rep.regret_cum = dynamic_regret(trace);
  rep.path_len = path_length(trace.comparators);
  const EnergyHybrid eh = pred_energy_and_hybrid(trace);
  rep.energy = eh.energy;
  rep.hybrid = eh.hybrid;
  rep.corrective = corrective_term(trace);
  if (strategy != nullptr) {
    rep.bound_value = regret_bound(trace, *strategy);
    rep.bound_satisfied = rep.regret_cum <= *rep.bound_value + 1e-6;
  }
  return rep;
}

}  // namespace optfprl
