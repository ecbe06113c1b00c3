#include "optfprl/harness.hpp"

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace optfprl {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::optfprl: return "optfprl";
    case Algo::ftrl_adaptive: return "ftrl";
    case Algo::ogd_adaptive: return "ogd";
    case Algo::optimistic_ftrl: return "opt-ftrl";
    case Algo::optimistic_ogd: return "opt-ogd";
  }
  return "?";
}

bool algo_from_name(const std::string& name, Algo& out) {
  if (name == "optfprl") out = Algo::optfprl;
  else if (name == "ftrl") out = Algo::ftrl_adaptive;
  else if (name == "ogd") out = Algo::ogd_adaptive;
  else if (name == "opt-ftrl") out = Algo::optimistic_ftrl;
  else if (name == "opt-ogd") out = Algo::optimistic_ogd;
  else return false;
  return true;
}

namespace {

[[noreturn]] void invariant_violation(long t, const std::string& what) {
  throw std::runtime_error("invariant violation at slot " + std::to_string(t) + ": " + what);
}

void check_feasible(const FeasibleSet& set, const Vec& x, long t) {
  if (!set.contains(x)) {
    std::ostringstream os;
    os << "action infeasible, ||x|| = " << norm(x) << " vs radius " << set.radius();
    invariant_violation(t, os.str());
  }
}

RunResult run_optfprl(const RunConfig& config, const std::vector<Vec>& comparators) {
  const Scenario& sc = config.scenario;
  const FeasibleSet& set = sc.set;
  StrategyConfig strategy = config.strategy;
  strategy.radius = set.radius();
  if (strategy.kind == Strategy::known_path && strategy.path_budget < 0.0)
    strategy.path_budget = path_length(comparators);

  Trace trace;
  trace.radius = set.radius();
  trace.comparators = comparators;
  trace.slots.reserve(sc.horizon);

  LearnerState state = init_learner(set, sc.prediction_at(1), strategy, config.prune_cadence);
  for (long t = 1; t <= sc.horizon; ++t) {
    const CostSpec cost = sc.cost_at(t);
    SlotRecord rec;
    rec.x = state.x_current;
    rec.loss = cost.value(state.x_current);
    rec.comparator_loss = cost.value(comparators[t - 1]);
    if (config.check_invariants) check_feasible(set, state.x_current, t);

    const Vec* u = strategy.kind == Strategy::observed_path ? &comparators[t - 1] : nullptr;
    const StepOutcome out =
        observe_and_step(state, cost, sc.prediction_at(t + 1), strategy, set, u);

    rec.epsilon = out.epsilon;
    rec.sigma_t = out.sigma_t;
    rec.sigma_cum = state.sigma_cum;
    rec.state_norm = out.state_norm;
    rec.pruned = out.pruned;
    rec.delta_t = out.delta_t;
    trace.slots.push_back(std::move(rec));

    if (config.check_invariants && config.prune_cadence == 1) {
      const double cap = set.radius() * out.sigma_before + out.epsilon;
      if (out.state_norm > cap + 1e-9) {
        std::ostringstream os;
        os << "state bound broken, ||p|| = " << out.state_norm << " > R*sigma_prev + eps = "
           << cap;
        invariant_violation(t, os.str());
      }
    }
  }

  RunResult result;
  result.report = compute_metrics(trace, &strategy);
  result.trace = std::move(trace);
  return result;
}

RunResult run_baseline(const RunConfig& config, const std::vector<Vec>& comparators) {
  const Scenario& sc = config.scenario;
  const FeasibleSet& set = sc.set;

  Trace trace;
  trace.radius = set.radius();
  trace.comparators = comparators;
  trace.slots.reserve(sc.horizon);

  BaselineKind kind;
  switch (config.algo) {
    case Algo::ftrl_adaptive: kind = BaselineKind::ftrl_adaptive; break;
    case Algo::ogd_adaptive: kind = BaselineKind::ogd_adaptive; break;
    case Algo::optimistic_ftrl: kind = BaselineKind::optimistic_ftrl; break;
    case Algo::optimistic_ogd: kind = BaselineKind::optimistic_ogd; break;
    default: throw std::logic_error("run_baseline: not a baseline algo");
  }

  BaselineState state;
  if (sc.horizon >= 1) {
    const Vec gp1 = sc.prediction_at(1).subgradient_at(zeros(sc.dim));
    state = baseline_init(kind, set, &gp1);
  } else {
    state = baseline_init(kind, set);
  }

  for (long t = 1; t <= sc.horizon; ++t) {
    const CostSpec cost = sc.cost_at(t);
    SlotRecord rec;
    rec.x = state.x_current;
    rec.loss = cost.value(state.x_current);
    rec.comparator_loss = cost.value(comparators[t - 1]);
    if (config.check_invariants) check_feasible(set, state.x_current, t);

    const Vec g = cost.subgradient_at(state.x_current);
    const Vec g_pred = sc.prediction_at(t).subgradient_at(state.x_current);
    rec.epsilon = prediction_error(g, g_pred);

    switch (kind) {
      case BaselineKind::ftrl_adaptive:
        ftrl_adaptive_step(state, g, set);
        break;
      case BaselineKind::ogd_adaptive:
        ogd_adaptive_step(state, g, set);
        break;
      case BaselineKind::optimistic_ftrl:
        optimistic_ftrl_step(state, g, sc.prediction_at(t + 1).subgradient_at(state.x_current),
                             set);
        break;
      case BaselineKind::optimistic_ogd:
        optimistic_ogd_step(state, g, g_pred,
                            sc.prediction_at(t + 1).subgradient_at(state.x_current), set);
        break;
    }

    const bool ftrl_kind =
        kind == BaselineKind::ftrl_adaptive || kind == BaselineKind::optimistic_ftrl;
    rec.sigma_cum = ftrl_kind && state.grad_energy > 0.0
                        ? state.reg_scale * std::sqrt(state.grad_energy)
                        : 0.0;
    rec.sigma_t = 0.0;
    rec.state_norm = ftrl_kind ? norm(state.g_cum) : 0.0;
    rec.pruned = false;
    trace.slots.push_back(std::move(rec));
  }

  RunResult result;
  result.report = compute_metrics(trace, nullptr);
  result.trace = std::move(trace);
  return result;
}

}  // namespace

RunResult run_experiment(const RunConfig& config) {
  if (config.scenario.horizon == 0) return {};
  const std::vector<Vec> comparators = comparator_sequence(config.scenario);
  if (config.algo == Algo::optfprl) return run_optfprl(config, comparators);
  return run_baseline(config, comparators);
}

std::vector<RunResult> run_batch(const std::vector<RunConfig>& configs, bool parallel) {
  std::vector<RunResult> results(configs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(configs.size()); ++i)
      results[i] = run_experiment(configs[i]);
  } else {
    for (std::size_t i = 0; i < configs.size(); ++i) results[i] = run_experiment(configs[i]);
  }
  return results;
}

Vec grid_argmin_oracle(const std::function<double(const Vec&)>& objective, const FeasibleSet& set,
                       double resolution, bool parallel) {
  if (set.dim() > 2) throw std::invalid_argument("grid_argmin_oracle: supports d <= 2 only");
  if (resolution <= 0.0) throw std::invalid_argument("grid_argmin_oracle: bad resolution");

  Vec lo, hi;
  set.bounding_box(lo, hi);
  const int d = set.dim();
  std::vector<std::int64_t> steps(d);
  for (int i = 0; i < d; ++i)
    steps[i] = static_cast<std::int64_t>(std::floor((hi[i] - lo[i]) / resolution)) + 1;
  const std::int64_t rows = steps[0];
  const std::int64_t cols = d == 2 ? steps[1] : 1;

  struct Best {
    double value = std::numeric_limits<double>::infinity();
    std::int64_t index = -1;
  };

  Best best;
  std::int64_t feasible = 0;
  if (parallel) {
    const int nthreads = omp_get_max_threads();
    std::vector<Best> local(nthreads);
    std::vector<std::int64_t> counts(nthreads, 0);
#pragma omp parallel
    {
      // thread-private accumulators; one write-back at the end keeps the
      // shared arrays out of the hot loop
      Best my_best;
      std::int64_t my_count = 0;
      Vec x(static_cast<std::size_t>(d));
#pragma omp for schedule(static) nowait
      for (std::int64_t r = 0; r < rows; ++r) {
        x[0] = lo[0] + static_cast<double>(r) * resolution;
        for (std::int64_t c = 0; c < cols; ++c) {
          if (d == 2) x[1] = lo[1] + static_cast<double>(c) * resolution;
          if (!set.contains(x)) continue;
          ++my_count;
          const double v = objective(x);
          const std::int64_t idx = r * cols + c;
          if (v < my_best.value || (v == my_best.value && idx < my_best.index)) my_best = {v, idx};
        }
      }
      const int tid = omp_get_thread_num();
      local[tid] = my_best;
      counts[tid] = my_count;
    }
    for (int i = 0; i < nthreads; ++i) {
      feasible += counts[i];
      if (local[i].index < 0) continue;
      if (local[i].value < best.value ||
          (local[i].value == best.value && local[i].index < best.index))
        best = local[i];
    }
  } else {
    for (std::int64_t r = 0; r < rows; ++r) {
      Best row_best;
      Vec x(static_cast<std::size_t>(d));
      x[0] = lo[0] + static_cast<double>(r) * resolution;
      for (std::int64_t c = 0; c < cols; ++c) {
        if (d == 2) x[1] = lo[1] + static_cast<double>(c) * resolution;
        if (!set.contains(x)) continue;
        ++feasible;
        const double v = objective(x);
        const std::int64_t idx = r * cols + c;
        if (v < row_best.value || (v == row_best.value && idx < row_best.index)) row_best = {v, idx};
      }
      if (row_best.index >= 0 &&
          (row_best.value < best.value ||
           (row_best.value == best.value && row_best.index < best.index)))
        best = row_best;
    }
  }

  if (feasible < 10)
    throw std::invalid_argument("grid_argmin_oracle: resolution too coarse for the set");
  Vec x(static_cast<std::size_t>(d));
  x[0] = lo[0] + static_cast<double>(best.index / cols) * resolution;
  if (d == 2) x[1] = lo[1] + static_cast<double>(best.index % cols) * resolution;
  return x;
}

}  // namespace optfprl
