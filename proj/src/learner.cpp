#include "optfprl/learner.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace optfprl {

namespace {

constexpr double kMoveTol = 1e-8;
constexpr int kMaxIter = 10000;
constexpr double kDivergeRadius = 1e9;

struct InnerSolve {
  UcStatus status = UcStatus::not_converged;
  Vec x;
};

// Projected (or free) descent with backtracking; movement-based stopping,
// since gradients need not vanish at constrained or nonsmooth optima.
InnerSolve minimize_first_order(const std::function<double(const Vec&)>& value,
                                const std::function<Vec(const Vec&)>& grad, int dim,
                                const FeasibleSet* set) {
  Vec x = zeros(dim);
  if (set != nullptr) x = set->project(x);
  double fx = value(x);
  double eta = 1.0;
  for (int it = 0; it < kMaxIter; ++it) {
    const Vec g = grad(x);
    if (sq_norm(g) == 0.0) return {UcStatus::found, x};
    bool accepted = false;
    Vec cand;
    double fc = 0.0;
    while (eta > 1e-18) {
      cand = x;
      axpy(-eta, g, cand);
      if (set != nullptr) cand = set->project(cand);
      fc = value(cand);
      const double move2 = sq_norm(diff(cand, x));
      if (move2 == 0.0) return {UcStatus::found, x};
      if (fc <= fx - 1e-4 * move2 / eta) {
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) return {UcStatus::found, x};  // no descent step left
    const double move = dist(cand, x);
    x = std::move(cand);
    fx = fc;
    if (set == nullptr && norm(x) > kDivergeRadius) return {UcStatus::no_minimizer, {}};
    if (move < kMoveTol) return {UcStatus::found, x};
    eta = std::min(eta * 2.0, 1e12);
  }
  return {UcStatus::not_converged, x};
}

Vec constrained_minimizer(const Vec& p_cum, double sigma_cum, const PredictionSpec& prediction,
                          const FeasibleSet& set) {
  if (prediction.is_linear())
    return set.linear_quadratic_argmin(sum(p_cum, prediction.coefficients()), sigma_cum);
  const auto value = [&](const Vec& x) {
    return dot(p_cum, x) + 0.5 * sigma_cum * sq_norm(x) + prediction.value(x);
  };
  const auto grad = [&](const Vec& x) {
    Vec g = prediction.subgradient_at(x);
    axpy(1.0, p_cum, g);
    axpy(sigma_cum, x, g);
    return g;
  };
  const InnerSolve r = minimize_first_order(value, grad, set.dim(), &set);
  if (r.status != UcStatus::found)
    throw std::runtime_error("constrained inner solve did not converge");
  return r.x;
}

UnconstrainedIterate unconstrained_iterate_impl(const Vec& p_cum, double sigma_cum,
                                                const PredictionSpec& prediction) {
  if (prediction.is_linear()) {
    if (sigma_cum > 0.0) {
      Vec x(p_cum);
      axpy(1.0, prediction.coefficients(), x);
      return {UcStatus::found, scaled(x, -1.0 / sigma_cum)};
    }
    return {UcStatus::no_minimizer, {}};
  }
  const auto value = [&](const Vec& x) {
    return dot(p_cum, x) + 0.5 * sigma_cum * sq_norm(x) + prediction.value(x);
  };
  const auto grad = [&](const Vec& x) {
    Vec g = prediction.subgradient_at(x);
    axpy(1.0, p_cum, g);
    axpy(sigma_cum, x, g);
    return g;
  };
  const InnerSolve r =
      minimize_first_order(value, grad, static_cast<int>(p_cum.size()), nullptr);
  return {r.status, r.x};
}

}  // namespace

LearnerState init_learner(const FeasibleSet& set, const PredictionSpec& first_prediction,
                          const StrategyConfig& strategy, int prune_cadence) {
  if (first_prediction.dim() != set.dim())
    throw std::invalid_argument("init_learner: prediction dimension mismatch");
  if (prune_cadence < 1) throw std::invalid_argument("init_learner: cadence must be >= 1");
  if (std::abs(strategy.radius - set.radius()) > 1e-9 * (1.0 + set.radius()))
    throw std::invalid_argument("init_learner: strategy radius does not match the set");

  LearnerState st;
  st.p_cum = zeros(set.dim());
  if (first_prediction.is_linear())
    st.x_current = set.linear_argmin(first_prediction.coefficients());
  else
    st.x_current = constrained_minimizer(zeros(set.dim()), 0.0, first_prediction, set);
  st.uc_feasible = false;  // sigma_{1:0} = 0: no unconstrained minimizer
  st.t = 1;
  st.prune_cadence = prune_cadence;
  st.last_prune_slot = 0;
  st.path_aug = 2.0 * set.radius();
  st.pred_current = first_prediction;
  return st;
}

Vec prune_vector(const Vec& p_cum_prev, const Vec& g_pred_t, double sigma_cum_prev,
                 const Vec& x_t) {
  check_same_dim(p_cum_prev, g_pred_t, "prune_vector");
  check_same_dim(p_cum_prev, x_t, "prune_vector");
  Vec g(p_cum_prev);
  axpy(1.0, g_pred_t, g);
  axpy(sigma_cum_prev, x_t, g);
  return negated(g);
}

double delta_first(const Vec& g1, const Vec& x1, const FeasibleSet& set) {
  const Vec best = set.linear_argmin(g1);
  const double d = dot(g1, x1) - dot(g1, best);
  return d < 0.0 ? 0.0 : d;
}

double delta_increment(const Vec& p_cum_t, double sigma_cum_prev, const Vec& x_t,
                       const FeasibleSet& set) {
  const Vec best = set.linear_quadratic_argmin(p_cum_t, sigma_cum_prev);
  const double at_x = dot(p_cum_t, x_t) + 0.5 * sigma_cum_prev * sq_norm(x_t);
  const double at_best = dot(p_cum_t, best) + 0.5 * sigma_cum_prev * sq_norm(best);
  const double d = at_x - at_best;
  return d < 0.0 ? 0.0 : d;
}

UnconstrainedIterate unconstrained_iterate(const Vec& p_cum, double sigma_cum,
                                           const PredictionSpec& prediction) {
  if (prediction.dim() != static_cast<int>(p_cum.size()))
    throw std::invalid_argument("unconstrained_iterate: dimension mismatch");
  return unconstrained_iterate_impl(p_cum, sigma_cum, prediction);
}

StepOutcome observe_and_step(LearnerState& state, const CostSpec& cost_t,
                             const PredictionSpec& prediction_next,
                             const StrategyConfig& strategy, const FeasibleSet& set,
                             const Vec* comparator_t) {
  const int dim = set.dim();
  if (cost_t.dim() != dim) throw std::invalid_argument("observe_and_step: cost dimension");
  if (prediction_next.dim() != dim)
    throw std::invalid_argument("observe_and_step: prediction dimension");
  if (strategy.kind == Strategy::observed_path && comparator_t == nullptr)
    throw std::invalid_argument("observe_and_step: observed-path schedule needs the comparator");

  StepOutcome out;
  const long t = state.t;

  // Cost and prediction subgradients at the committed action.
  const Vec g = cost_t.subgradient_at(state.x_current);
  const Vec g_pred = state.pred_current.subgradient_at(state.x_current);
  out.epsilon = prediction_error(g, g_pred);

  // Prune decision. The first slot has empty history, so the pruning formula
  // reduces to -g_pred_1 (x_1 minimizes the first prediction over the set, so
  // that is a valid normal-cone element); under a perfect prediction this
  // cancels the gradient outright. Later slots require an infeasible
  // unconstrained iterate and an elapsed cadence.
  Vec g_ind = zeros(dim);
  if (t == 1) {
    g_ind = negated(g_pred);
    out.pruned = !is_zero(g_ind);
  } else if (!state.uc_feasible && t - state.last_prune_slot >= state.prune_cadence) {
    g_ind = prune_vector(state.p_cum, g_pred, state.sigma_cum, state.x_current);
    out.pruned = true;
  }
  if (out.pruned) state.last_prune_slot = t;

  Vec p_t = sum(g, g_ind);
  axpy(1.0, p_t, state.p_cum);
  out.g_indicator = std::move(g_ind);
  out.state_norm = norm(state.p_cum);
  out.sigma_before = state.sigma_cum;

  // Recursive schedule: the realized regularized-loss gap must be known
  // before its sigma_t.
  if (strategy.kind == Strategy::recursive) {
    const double d = (t == 1) ? delta_first(g, state.x_current, set)
                              : delta_increment(state.p_cum, state.sigma_cum, state.x_current, set);
    state.delta_cum += d;
    out.delta_t = d;
  }

  double sigma_t = 0.0;
  switch (strategy.kind) {
    case Strategy::agnostic:
      sigma_t = sigma_agnostic(out.epsilon, state.energy_cum, strategy.radius, t);
      break;
    case Strategy::known_path:
      sigma_t = sigma_known_path(out.epsilon, state.energy_cum, strategy.radius,
                                 strategy.path_budget, t);
      break;
    case Strategy::observed_path: {
      const double path_aug_prev = state.path_aug;
      if (t >= 2 && state.has_comparator_prev)
        state.path_aug += dist(*comparator_t, state.comparator_prev);
      const double energy_t = state.energy_cum + out.epsilon * out.epsilon;
      sigma_t = sigma_observed_path(out.epsilon, energy_t, state.energy_cum, state.path_aug,
                                    path_aug_prev, strategy.radius, t);
      break;
    }
    case Strategy::recursive:
      sigma_t = sigma_recursive(*out.delta_t, strategy.radius);
      break;
  }
  state.sigma_cum += sigma_t;
  state.energy_cum += out.epsilon * out.epsilon;
  out.sigma_t = sigma_t;
  if (comparator_t != nullptr) {
    state.comparator_prev = *comparator_t;
    state.has_comparator_prev = true;
  }

  // Next iterate.
  const UnconstrainedIterate uc =
      unconstrained_iterate_impl(state.p_cum, state.sigma_cum, prediction_next);
  switch (uc.status) {
    case UcStatus::found:
      if (set.contains(uc.x)) {
        state.uc_feasible = true;
        out.x_next = uc.x;
      } else {
        state.uc_feasible = false;
        out.x_next = set.project(uc.x);
      }
      break;
    case UcStatus::no_minimizer:
      state.uc_feasible = false;
      out.x_next = constrained_minimizer(state.p_cum, state.sigma_cum, prediction_next, set);
      break;
    case UcStatus::not_converged:
      throw std::runtime_error("observe_and_step: inner solver did not converge at slot " +
                               std::to_string(t));
  }

  state.x_current = out.x_next;
  state.pred_current = prediction_next;
  state.t = t + 1;
  return out;
}

}  // namespace optfprl
