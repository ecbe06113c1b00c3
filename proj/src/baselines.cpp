#include "optfprl/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace optfprl {

namespace {
void resolve_scales(BaselineState& state, const FeasibleSet& set) {
  if (state.reg_scale < 0.0) state.reg_scale = std::sqrt(2.0) / (2.0 * set.radius());
  if (state.step_scale < 0.0) state.step_scale = std::sqrt(2.0) * set.radius();
}
}  // namespace

BaselineState baseline_init(BaselineKind kind, const FeasibleSet& set, const Vec* g_pred_1) {
  BaselineState st;
  st.kind = kind;
  st.g_cum = zeros(set.dim());
  st.g_pred_current = zeros(set.dim());
  st.x_current = zeros(set.dim());
  st.t = 1;
  resolve_scales(st, set);
  if (kind == BaselineKind::optimistic_ftrl || kind == BaselineKind::optimistic_ogd) {
    if (g_pred_1 != nullptr) st.g_pred_current = *g_pred_1;
    if (kind == BaselineKind::optimistic_ftrl)
      st.x_current = set.linear_argmin(st.g_pred_current);
  }
  return st;
}

Vec ftrl_adaptive_step(BaselineState& state, const Vec& g_t, const FeasibleSet& set) {
  if (state.kind != BaselineKind::ftrl_adaptive)
    throw std::invalid_argument("ftrl_adaptive_step: wrong state kind");
  resolve_scales(state, set);
  axpy(1.0, g_t, state.g_cum);
  // accumulate through norm-then-square so the optimistic variant under zero
  // predictions (whose energy is ||g - 0||^2) reproduces this trace bit for bit
  const double gn = norm(g_t);
  state.grad_energy += gn * gn;
  state.t += 1;
  if (state.grad_energy == 0.0) {
    state.x_current = zeros(set.dim());
    return state.x_current;
  }
  const double sigma = state.reg_scale * std::sqrt(state.grad_energy);
  state.x_current = set.project(scaled(state.g_cum, -1.0 / sigma));
  return state.x_current;
}

Vec ogd_adaptive_step(BaselineState& state, const Vec& g_t, const FeasibleSet& set) {
  if (state.kind != BaselineKind::ogd_adaptive)
    throw std::invalid_argument("ogd_adaptive_step: wrong state kind");
  resolve_scales(state, set);
  const double gn = norm(g_t);
  state.grad_energy += gn * gn;
  state.t += 1;
  if (state.grad_energy == 0.0) return state.x_current;
  const double eta = state.step_scale / std::sqrt(state.grad_energy);
  Vec x(state.x_current);
  axpy(-eta, g_t, x);
  state.x_current = set.project(x);
  return state.x_current;
}

Vec optimistic_ftrl_step(BaselineState& state, const Vec& g_t, const Vec& g_pred_next,
                         const FeasibleSet& set) {
  if (state.kind != BaselineKind::optimistic_ftrl)
    throw std::invalid_argument("optimistic_ftrl_step: wrong state kind");
  resolve_scales(state, set);
  const double eps = dist(g_t, state.g_pred_current);
  axpy(1.0, g_t, state.g_cum);
  state.grad_energy += eps * eps;
  state.g_pred_current = g_pred_next;
  state.t += 1;
  if (state.grad_energy == 0.0) {
    state.x_current = set.linear_argmin(g_pred_next);
    return state.x_current;
  }
  const double sigma = state.reg_scale * std::sqrt(state.grad_energy);
  state.x_current = set.project(scaled(sum(state.g_cum, g_pred_next), -1.0 / sigma));
  return state.x_current;
}

Vec optimistic_ogd_step(BaselineState& state, const Vec& g_t, const Vec& g_pred_t,
                        const Vec& g_pred_next, const FeasibleSet& set) {
  if (state.kind != BaselineKind::optimistic_ogd)
    throw std::invalid_argument("optimistic_ogd_step: wrong state kind");
  resolve_scales(state, set);
  const double eps = dist(g_t, g_pred_t);
  state.grad_energy += eps * eps;
  state.g_pred_current = g_pred_next;
  state.t += 1;
  if (state.grad_energy == 0.0) return state.x_current;
  const double eta = state.step_scale / std::sqrt(state.grad_energy);
  Vec dir = diff(g_t, g_pred_t);
  axpy(1.0, g_pred_next, dir);
  Vec x(state.x_current);
  axpy(-eta, dir, x);
  state.x_current = set.project(x);
  return state.x_current;
}

}  // namespace optfprl
