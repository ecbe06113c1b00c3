#pragma once

#include <string>

namespace optfprl {

// The four incremental strong-convexity schedules. Each sigma_* function is a
// pure function of the quantities observed so far, so the formulas can be
// tested in isolation; the learner owns the accumulation.
enum class Strategy { agnostic, known_path, observed_path, recursive };

struct StrategyConfig {
  Strategy kind = Strategy::agnostic;
  double radius = 1.0;       // feasible-set radius R
  double path_budget = -1.0; // known-path schedule; negative = resolve from data

  // Base constant:
  //   agnostic       1/(4R)
  //   known-path     1/(2*sqrt(2R*(2R + P)))
  //   observed-path  1/(2*sqrt(2R))
  //   recursive      1/(8R^2)
  double base_sigma() const;
};

const char* strategy_name(Strategy s);
bool strategy_from_name(const std::string& name, Strategy& out);

// energy_prev = E_{t-1} = sum of squared prediction errors before slot t.
double sigma_agnostic(double eps_t, double energy_prev, double radius, long t);

double sigma_known_path(double eps_t, double energy_prev, double radius, double path_budget,
                        long t);

// path_aug_* are the augmented observed path lengths P'_t = 2R + P_t; the
// caller must supply them non-decreasing.
double sigma_observed_path(double eps_t, double energy_t, double energy_prev, double path_aug_t,
                           double path_aug_prev, double radius, long t);

double sigma_recursive(double delta_t, double radius);

}  // namespace optfprl
