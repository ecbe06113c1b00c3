#include <doctest.h>

#include <random>

#include "optfprl/oracles.hpp"

using namespace optfprl;

TEST_CASE("linear oracle value and subgradient") {
  const CostSpec c = CostSpec::linear(Vec{1.0, 1.0});
  CHECK(evaluate(c, Vec{0.0, 0.0}) == 0.0);
  CHECK(subgradient(c, Vec{5.0, -3.0}) == Vec{1.0, 1.0});
  CHECK(subgradient(c, Vec{0.0, 0.0}) == Vec{1.0, 1.0});  // constant in x

  const CostSpec ones = CostSpec::linear(Vec(16, 1.0));
  CHECK(evaluate(ones, Vec(16, -0.5)) == doctest::Approx(-8.0));
}

TEST_CASE("general oracle delegates to the user functions") {
  const CostSpec q = quadratic_around(Vec{0.0, 0.0});
  CHECK(evaluate(q, Vec{2.0, 0.0}) == doctest::Approx(2.0));
  CHECK(subgradient(q, Vec{1.0, -1.0}) == Vec{1.0, -1.0});
}

TEST_CASE("absolute value picks the midpoint at the kink") {
  const CostSpec a = abs_value_1d();
  CHECK(subgradient(a, Vec{0.0}) == Vec{0.0});
  CHECK(subgradient(a, Vec{-2.0}) == Vec{-1.0});
  CHECK(subgradient(a, Vec{3.0}) == Vec{1.0});
}

TEST_CASE("declared Lipschitz bounds are enforced") {
  CHECK_THROWS_AS(CostSpec::linear(Vec{3.0, 4.0}, 4.0), std::invalid_argument);
  const CostSpec ok = CostSpec::linear(Vec{3.0, 4.0}, 5.0);
  CHECK(ok.lipschitz() == 5.0);

  const CostSpec wild = CostSpec::general(
      1, [](const Vec& x) { return x[0] * x[0]; }, [](const Vec& x) { return Vec{2.0 * x[0]}; },
      1.0);
  CHECK(subgradient(wild, Vec{0.25}) == Vec{0.5});
  CHECK_THROWS_AS(subgradient(wild, Vec{10.0}), std::runtime_error);
}

TEST_CASE("prediction error") {
  CHECK(prediction_error(Vec{1.0, 2.0}, Vec{1.0, 2.0}) == 0.0);
  CHECK(prediction_error(Vec{1.0, 0.0}, Vec{0.0, 0.0}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(prediction_error(Vec{1.0}, Vec{1.0, 2.0}), std::invalid_argument);

  // scenario-6 shape at t=10: the prediction cancels the cost entirely
  const Vec c(16, 1.0);
  Vec pred = c;
  for (double& v : pred) v -= v / (0.1 * 10.0);
  CHECK(prediction_error(c, pred) == doctest::Approx(4.0));
}

TEST_CASE("first-order convexity holds on random pairs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  const CostSpec q = quadratic_around(Vec{0.5, -0.25});
  for (int i = 0; i < 200; ++i) {
    const Vec x{unif(rng), unif(rng)};
    const Vec y{unif(rng), unif(rng)};
    const Vec g = subgradient(q, x);
    CHECK(evaluate(q, y) >= evaluate(q, x) + dot(g, diff(y, x)) - 1e-9);
  }
  const CostSpec a = abs_value_1d();
  for (int i = 0; i < 200; ++i) {
    const Vec x{unif(rng)};
    const Vec y{unif(rng)};
    const Vec g = subgradient(a, x);
    CHECK(evaluate(a, y) >= evaluate(a, x) + dot(g, diff(y, x)) - 1e-9);
  }
}
