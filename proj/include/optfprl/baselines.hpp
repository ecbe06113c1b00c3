#pragma once

#include "optfprl/geometry.hpp"
#include "optfprl/vec.hpp"

namespace optfprl {

// Reference learners: follow-the-regularized-leader with adaptive Euclidean
// regularization (lazy), gradient descent with adaptive step sizes (greedy),
// and their optimistic variants that scale with prediction errors instead of
// raw gradients. The step constants are the standard diameter-tuned choices
// (sqrt(2)/(2R) regularization, sqrt(2)*R step size); they are plain struct
// fields so experiments can override them.
enum class BaselineKind { ftrl_adaptive, ogd_adaptive, optimistic_ftrl, optimistic_ogd };

struct BaselineState {
  BaselineKind kind = BaselineKind::ftrl_adaptive;
  Vec g_cum;                // running gradient sum (ftrl kinds)
  double grad_energy = 0.0; // sum of ||g||^2, or of eps^2 for optimistic kinds
  Vec x_current;
  long t = 1;
  Vec g_pred_current;       // prediction in force for the current slot (optimistic-ftrl)
  double reg_scale = -1.0;  // sigma_{1:t} = reg_scale * sqrt(grad_energy); default sqrt(2)/(2R)
  double step_scale = -1.0; // eta_t = step_scale / sqrt(grad_energy); default sqrt(2)*R
};

BaselineState baseline_init(BaselineKind kind, const FeasibleSet& set,
                            const Vec* g_pred_1 = nullptr);

// Lazy: g_cum += g; sigma = reg_scale * sqrt(sum ||g||^2); project(-g_cum/sigma).
Vec ftrl_adaptive_step(BaselineState& state, const Vec& g_t, const FeasibleSet& set);

// Greedy: eta = step_scale / sqrt(sum ||g||^2); project(x - eta*g).
Vec ogd_adaptive_step(BaselineState& state, const Vec& g_t, const FeasibleSet& set);

// Optimistic lazy: energy accumulates ||g - g_pred||^2 against the prediction
// held for this slot; the next prediction is composed into the leader.
Vec optimistic_ftrl_step(BaselineState& state, const Vec& g_t, const Vec& g_pred_next,
                         const FeasibleSet& set);

// Optimistic greedy, one-step form: the move direction is
// g_t - g_pred_t + g_pred_next.
Vec optimistic_ogd_step(BaselineState& state, const Vec& g_t, const Vec& g_pred_t,
                        const Vec& g_pred_next, const FeasibleSet& set);

}  // namespace optfprl
