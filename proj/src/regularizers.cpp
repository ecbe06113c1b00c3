#include "optfprl/regularizers.hpp"

#include <cmath>
#include <stdexcept>

namespace optfprl {

double StrategyConfig::base_sigma() const {
  if (radius <= 0.0) throw std::invalid_argument("StrategyConfig: radius must be positive");
  switch (kind) {
    case Strategy::agnostic:
      return 1.0 / (4.0 * radius);
    case Strategy::known_path: {
      if (path_budget < 0.0)
        throw std::invalid_argument("StrategyConfig: known-path budget not resolved");
      const double path_aug = 2.0 * radius + path_budget;
      return 1.0 / (2.0 * std::sqrt(2.0 * radius * path_aug));
    }
    case Strategy::observed_path:
      return 1.0 / (2.0 * std::sqrt(2.0 * radius));
    case Strategy::recursive:
      return 1.0 / (8.0 * radius * radius);
  }
  throw std::logic_error("StrategyConfig: unknown kind");
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::agnostic: return "agnostic";
    case Strategy::known_path: return "known-path";
    case Strategy::observed_path: return "observed-path";
    case Strategy::recursive: return "recursive";
  }
  return "?";
}

bool strategy_from_name(const std::string& name, Strategy& out) {
  if (name == "agnostic") out = Strategy::agnostic;
  else if (name == "known-path") out = Strategy::known_path;
  else if (name == "observed-path") out = Strategy::observed_path;
  else if (name == "recursive") out = Strategy::recursive;
  else return false;
  return true;
}

namespace {
double root_increment(double eps_t, double energy_prev, long t) {
  if (t <= 1) return eps_t;  // sqrt(eps^2) - sqrt(0)
  return std::sqrt(energy_prev + eps_t * eps_t) - std::sqrt(energy_prev);
}
}  // namespace

double sigma_agnostic(double eps_t, double energy_prev, double radius, long t) {
  const double base = 1.0 / (4.0 * radius);
  return base * root_increment(eps_t, energy_prev, t);
}

double sigma_known_path(double eps_t, double energy_prev, double radius, double path_budget,
                        long t) {
  StrategyConfig cfg{Strategy::known_path, radius, path_budget};
  return cfg.base_sigma() * root_increment(eps_t, energy_prev, t);
}

double sigma_observed_path(double eps_t, double energy_t, double energy_prev, double path_aug_t,
                           double path_aug_prev, double radius, long t) {
  if (path_aug_t < path_aug_prev)
    throw std::invalid_argument("sigma_observed_path: augmented path must be non-decreasing");
  if (path_aug_t <= 0.0)
    throw std::invalid_argument("sigma_observed_path: augmented path must be positive");
  const double base = 1.0 / (2.0 * std::sqrt(2.0 * radius));
  if (t <= 1) return base * eps_t / std::sqrt(path_aug_t);
  const double ratio_t = std::sqrt(energy_t / path_aug_t);
  const double ratio_prev = std::sqrt(energy_prev / path_aug_prev);
  return base * std::max(0.0, ratio_t - ratio_prev);
}

double sigma_recursive(double delta_t, double radius) {
  return delta_t / (8.0 * radius * radius);
}

}  // namespace optfprl
