#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "optfprl/regularizers.hpp"

using namespace optfprl;

TEST_CASE("agnostic schedule") {
  CHECK(sigma_agnostic(1.0, 0.0, 2.0, 1) == doctest::Approx(0.125));
  CHECK(sigma_agnostic(0.0, 5.0, 2.0, 7) == 0.0);
  CHECK(sigma_agnostic(1.0, 1.0, 2.0, 2) == doctest::Approx((std::sqrt(2.0) - 1.0) / 8.0));
}

TEST_CASE("known-path schedule") {
  // P = 0 at R=2: augmented path 4, base 1/(2*sqrt(2*2*4)) = 1/8
  const StrategyConfig cfg{Strategy::known_path, 2.0, 0.0};
  CHECK(cfg.base_sigma() == doctest::Approx(0.125));
  CHECK(sigma_known_path(0.0, 3.0, 2.0, 0.0, 4) == 0.0);
  // P = 12: augmented path 16, base 1/16, first slot eps=2 -> 1/8
  CHECK(sigma_known_path(2.0, 0.0, 2.0, 12.0, 1) == doctest::Approx(0.125));
}

TEST_CASE("observed-path schedule") {
  CHECK(sigma_observed_path(1.0, 1.0, 0.0, 4.0, 4.0, 2.0, 1) == doctest::Approx(0.125));
  // ratio decreased: clamped at zero
  CHECK(sigma_observed_path(0.5, 4.25, 4.0, 8.0, 4.0, 2.0, 3) == 0.0);
  // eps = 0 with a growing path: ratio decreased, clamped
  CHECK(sigma_observed_path(0.0, 4.0, 4.0, 6.0, 4.0, 2.0, 3) == 0.0);
  CHECK_THROWS_AS(sigma_observed_path(1.0, 1.0, 0.0, 3.0, 4.0, 2.0, 2), std::invalid_argument);
}

TEST_CASE("recursive schedule") {
  CHECK(sigma_recursive(0.0, 2.0) == 0.0);
  CHECK(sigma_recursive(2.0, 2.0) == doctest::Approx(1.0 / 16.0));
  CHECK(sigma_recursive(3.0, 1.0) == doctest::Approx(3.0 / 8.0));
}

TEST_CASE("base constants") {
  const StrategyConfig agn{Strategy::agnostic, 2.0};
  const StrategyConfig obs{Strategy::observed_path, 2.0};
  const StrategyConfig rec{Strategy::recursive, 2.0};
  const StrategyConfig unresolved{Strategy::known_path, 2.0, -1.0};
  CHECK(agn.base_sigma() == doctest::Approx(0.125));
  CHECK(obs.base_sigma() == doctest::Approx(0.25));
  CHECK(rec.base_sigma() == doctest::Approx(1.0 / 32.0));
  CHECK_THROWS_AS(unresolved.base_sigma(), std::invalid_argument);
}

TEST_CASE("telescoping: accumulated sigma equals base * sqrt(energy)") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> unif(0.0, 3.0);
  for (int rep = 0; rep < 50; ++rep) {
    double energy = 0.0, sig_agn = 0.0, sig_kp = 0.0;
    const double budget = unif(rng) * 10.0;
    for (long t = 1; t <= 60; ++t) {
      const double eps = (t % 7 == 0) ? 0.0 : unif(rng);
      sig_agn += sigma_agnostic(eps, energy, 2.0, t);
      sig_kp += sigma_known_path(eps, energy, 2.0, budget, t);
      energy += eps * eps;
      CHECK(std::abs(sig_agn - std::sqrt(energy) / 8.0) <= 1e-12 * (1.0 + sig_agn));
      const StrategyConfig kp{Strategy::known_path, 2.0, budget};
      CHECK(std::abs(sig_kp - kp.base_sigma() * std::sqrt(energy)) <= 1e-12 * (1.0 + sig_kp));
    }
  }
}

TEST_CASE("observed-path accumulation stays above the tracked ratio") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double radius = 2.0;
  const StrategyConfig obs{Strategy::observed_path, radius};
  const double base = obs.base_sigma();
  for (int rep = 0; rep < 50; ++rep) {
    double energy = 0.0, sig = 0.0, path_aug = 2.0 * radius;
    for (long t = 1; t <= 80; ++t) {
      const double eps = unif(rng) * 2.0;
      const double path_prev = path_aug;
      if (t >= 2) path_aug += unif(rng) * 2.0 * radius;
      const double energy_t = energy + eps * eps;
      sig += sigma_observed_path(eps, energy_t, energy, path_aug, path_prev, radius, t);
      energy = energy_t;
      CHECK(sig >= base * std::sqrt(energy / path_aug) - 1e-12);
    }
  }
}
