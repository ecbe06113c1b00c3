#pragma once

#include <optional>

#include "optfprl/geometry.hpp"
#include "optfprl/oracles.hpp"
#include "optfprl/regularizers.hpp"

namespace optfprl {

// Online learner that follows the regularized, linearized history but prunes
// it through the feasible set's normal cone whenever the unconstrained iterate
// leaves the set. State per run:
//
//   p_cum      aggregated composite subgradients p_{1:t} (the dual state)
//   sigma_cum  accumulated strong convexity sigma_{1:t}
//   energy_cum accumulated squared prediction errors E_t
//   x_current  the feasible action for the upcoming slot
//   uc_feasible  whether x_current's unconstrained solution was feasible when
//                it was produced; a false value is a prune opportunity
//
// With sigma_{1:t} = 0 the unconstrained problem has no minimizer; that case
// is treated as infeasible and the constrained iterate is taken directly.
struct LearnerState {
  Vec p_cum;
  double sigma_cum = 0.0;
  double energy_cum = 0.0;
  double path_aug = 0.0;    // 2R + observed comparator path (observed-path schedule)
  double delta_cum = 0.0;   // accumulated regularized-loss gaps (recursive schedule)
  Vec x_current;
  bool uc_feasible = false;
  long t = 1;
  int prune_cadence = 1;    // take a prune opportunity only every k slots
  long last_prune_slot = 0;
  PredictionSpec pred_current;
  Vec comparator_prev;
  bool has_comparator_prev = false;
};

struct StepOutcome {
  Vec x_next;
  bool pruned = false;
  Vec g_indicator;             // normal-cone component g_t^I
  double epsilon = 0.0;        // ||g_t - g_pred_t||
  double sigma_t = 0.0;
  std::optional<double> delta_t;  // recursive schedule only
  double state_norm = 0.0;        // ||p_{1:t}|| after this slot
  double sigma_before = 0.0;      // sigma_{1:t-1}; the state norm is bounded by
                                  // R*sigma_before + epsilon at prune cadence 1
};

enum class UcStatus { found, no_minimizer, not_converged };

struct UnconstrainedIterate {
  UcStatus status = UcStatus::no_minimizer;
  Vec x;
};

// x_1 = constrained minimizer of the first prediction; closed form for linear
// predictions, first-order solve otherwise.
LearnerState init_learner(const FeasibleSet& set, const PredictionSpec& first_prediction,
                          const StrategyConfig& strategy, int prune_cadence = 1);

// Normal-cone element -(p_{1:t-1} + g_pred_t + sigma_{1:t-1} x_t); valid when
// x_t lies on the boundary, which the caller guarantees.
Vec prune_vector(const Vec& p_cum_prev, const Vec& g_pred_t, double sigma_cum_prev,
                 const Vec& x_t);

// First-slot gap <g_1, x_1> - min_{x in set} <g_1, x>.
double delta_first(const Vec& g1, const Vec& x1, const FeasibleSet& set);

// Regularized-loss gap of x_t against the constrained minimizer of
// <p_{1:t}, x> + (sigma_{1:t-1}/2)||x||^2, clamped at 0 (floating point can
// produce tiny negative gaps; the exact gap is nonnegative).
double delta_increment(const Vec& p_cum_t, double sigma_cum_prev, const Vec& x_t,
                       const FeasibleSet& set);

// Minimizer of <p_cum, x> + (sigma_cum/2)||x||^2 + prediction(x) over R^d.
// Linear prediction: closed form, or no_minimizer when sigma_cum = 0. General
// prediction: inner first-order solve (movement tolerance 1e-8, at most 1e4
// iterations); divergence reports no_minimizer, stalling reports
// not_converged.
UnconstrainedIterate unconstrained_iterate(const Vec& p_cum, double sigma_cum,
                                           const PredictionSpec& prediction);

// One full slot: observe the cost, evaluate the prediction error, prune if the
// previous unconstrained iterate was infeasible and the cadence permits,
// accumulate the composite gradient, advance the regularization schedule, and
// produce the next feasible action. `comparator_t` is required by the
// observed-path schedule (the comparator revealed at slot t) and ignored
// otherwise.
StepOutcome observe_and_step(LearnerState& state, const CostSpec& cost_t,
                             const PredictionSpec& prediction_next,
                             const StrategyConfig& strategy, const FeasibleSet& set,
                             const Vec* comparator_t = nullptr);

}  // namespace optfprl
