#include "optfprl/oracles.hpp"

#include <cmath>
#include <utility>

namespace optfprl {

CostSpec CostSpec::linear(Vec coefficients, std::optional<double> lipschitz) {
  if (lipschitz && norm(coefficients) > *lipschitz + 1e-9)
    throw std::invalid_argument("CostSpec::linear: coefficients exceed the Lipschitz bound");
  CostSpec s;
  s.linear_ = true;
  s.dim_ = static_cast<int>(coefficients.size());
  s.coeffs_ = std::move(coefficients);
  s.lipschitz_ = lipschitz;
  return s;
}

CostSpec CostSpec::general(int dim, ValueFn value, SubgradFn subgrad,
                           std::optional<double> lipschitz) {
  if (dim <= 0) throw std::invalid_argument("CostSpec::general: dimension must be positive");
  if (!value || !subgrad) throw std::invalid_argument("CostSpec::general: missing oracle");
  CostSpec s;
  s.linear_ = false;
  s.dim_ = dim;
  s.value_ = std::move(value);
  s.subgrad_ = std::move(subgrad);
  s.lipschitz_ = lipschitz;
  return s;
}

const Vec& CostSpec::coefficients() const {
  if (!linear_) throw std::logic_error("CostSpec::coefficients: not a linear spec");
  return coeffs_;
}

double CostSpec::value(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("CostSpec::value: dimension mismatch");
  if (linear_) return dot(coeffs_, x);
  return value_(x);
}

Vec CostSpec::subgradient_at(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("CostSpec::subgradient_at: dimension mismatch");
  if (linear_) return coeffs_;
  Vec g = subgrad_(x);
  if (static_cast<int>(g.size()) != dim_)
    throw std::runtime_error("CostSpec::subgradient_at: user oracle returned wrong dimension");
  if (lipschitz_ && norm(g) > *lipschitz_ + 1e-9)
    throw std::runtime_error("CostSpec::subgradient_at: subgradient exceeds the Lipschitz bound");
  return g;
}

double evaluate(const CostSpec& spec, const Vec& x) { return spec.value(x); }

Vec subgradient(const CostSpec& spec, const Vec& x) { return spec.subgradient_at(x); }

double prediction_error(const Vec& g, const Vec& g_pred) {
  check_same_dim(g, g_pred, "prediction_error");
  return dist(g, g_pred);
}

CostSpec zero_prediction(int dim) { return CostSpec::linear(zeros(dim)); }

CostSpec quadratic_around(Vec center) {
  const int dim = static_cast<int>(center.size());
  Vec c = std::move(center);
  return CostSpec::general(
      dim, [c](const Vec& x) { return 0.5 * sq_norm(diff(x, c)); },
      [c](const Vec& x) { return diff(x, c); });
}

CostSpec abs_value_1d() {
  return CostSpec::general(
      1, [](const Vec& x) { return std::abs(x[0]); },
      [](const Vec& x) {
        // midpoint selection at the kink
        if (x[0] > 0.0) return Vec{1.0};
        if (x[0] < 0.0) return Vec{-1.0};
        return Vec{0.0};
      },
      1.0);
}

}  // namespace optfprl
