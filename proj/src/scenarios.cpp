#include "optfprl/scenarios.hpp"

#include <memory>
#include <random>
#include <stdexcept>

namespace optfprl {

namespace {

double scenario_coef(int id, long t) {
  const bool first_block = ((t - 1) / 50) % 2 == 0;
  switch (id) {
    case 1:
      return t <= 1000 ? -1.0 : 1.0;
    case 2:
      if (t <= 1000 || (t >= 2000 && t <= 2500) || (t >= 3500 && t <= 3750)) return -1.0;
      return 1.0;
    case 3:
      if (t <= 1000) return -1.0;
      if (t >= 2000 && t <= 2500) return -5.0;
      if (t >= 3500 && t <= 3750) return -10.0;
      return 1.0;
    case 4:
    case 6:
      return first_block ? 1.0 : -1.0;
    case 5:
      return first_block ? 1.0 : -0.1;
    default:
      throw std::invalid_argument("scenario id must be 1..6");
  }
}

Vec constant_vec(int dim, double v) { return Vec(static_cast<std::size_t>(dim), v); }

}  // namespace

CostSpec scenario_costs(int id, long t, long horizon, int dim) {
  if (t < 1 || t > horizon)
    throw std::out_of_range("scenario_costs: slot " + std::to_string(t) + " outside [1, " +
                            std::to_string(horizon) + "]");
  return CostSpec::linear(constant_vec(dim, scenario_coef(id, t)));
}

PredictionSpec scenario_prediction(int id, long t, int dim) {
  if (id == 6) {
    // cost minus cost/(0.1 t): adversarial early, near-perfect past t ~ 100
    const double c = scenario_coef(6, t) * (1.0 - 10.0 / static_cast<double>(t));
    return CostSpec::linear(constant_vec(dim, c));
  }
  return zero_prediction(dim);
}

Scenario make_scenario(int id, long horizon, int dim, double radius) {
  if (id < 1 || id > 6) throw std::invalid_argument("scenario id must be 1..6");
  Scenario s;
  s.id = std::to_string(id);
  s.horizon = horizon;
  s.dim = dim;
  s.set = FeasibleSet::ball(dim, radius);
  s.cost_at = [id, horizon, dim](long t) { return scenario_costs(id, t, horizon, dim); };
  s.prediction_at = [id, dim](long t) { return scenario_prediction(id, t, dim); };
  return s;
}

Scenario make_random_scenario(const RandomInstanceConfig& cfg) {
  if (cfg.dim <= 0) throw std::invalid_argument("random scenario: dimension must be positive");
  if (cfg.horizon < 0) throw std::invalid_argument("random scenario: negative horizon");

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto sphere_point = [&](double r) {
    Vec v(static_cast<std::size_t>(cfg.dim));
    double n = 0.0;
    do {
      for (double& x : v) x = gauss(rng);
      n = norm(v);
    } while (n == 0.0);
    return scaled(v, r / n);
  };

  auto costs = std::make_shared<std::vector<Vec>>();
  auto preds = std::make_shared<std::vector<Vec>>();
  costs->reserve(cfg.horizon + 1);
  preds->reserve(cfg.horizon + 1);
  for (long t = 0; t <= cfg.horizon; ++t) {
    costs->push_back(sphere_point(cfg.lipschitz));
    switch (cfg.pred_mode) {
      case PredictionMode::zero:
        preds->push_back(zeros(cfg.dim));
        break;
      case PredictionMode::perfect:
        preds->push_back(costs->back());
        break;
      case PredictionMode::noisy: {
        Vec p = costs->back();
        for (double& x : p) x += cfg.noise_scale * gauss(rng);
        preds->push_back(std::move(p));
        break;
      }
    }
  }

  Scenario s;
  s.id = "random";
  s.horizon = cfg.horizon;
  s.dim = cfg.dim;
  s.set = FeasibleSet::ball(cfg.dim, cfg.radius);
  s.seed = cfg.seed;
  const long horizon = cfg.horizon;
  s.cost_at = [costs, horizon](long t) {
    if (t < 1 || t > horizon) throw std::out_of_range("random scenario: slot out of range");
    return CostSpec::linear((*costs)[t - 1]);
  };
  s.prediction_at = [preds, horizon](long t) {
    if (t < 1 || t > horizon + 1) throw std::out_of_range("random scenario: slot out of range");
    return CostSpec::linear((*preds)[t - 1]);
  };
  return s;
}

std::vector<Vec> comparator_sequence(const Scenario& scenario) {
  std::vector<Vec> u;
  u.reserve(scenario.horizon);
  for (long t = 1; t <= scenario.horizon; ++t) {
    const CostSpec c = scenario.cost_at(t);
    if (!c.is_linear())
      throw std::invalid_argument("comparator_sequence: closed form needs linear costs");
    u.push_back(scenario.set.linear_argmin(c.coefficients()));
  }
  return u;
}

}  // namespace optfprl
