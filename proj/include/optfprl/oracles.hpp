#pragma once

#include <functional>
#include <optional>

#include "optfprl/vec.hpp"

namespace optfprl {

// First-order oracle for a convex loss: value plus one deterministic
// subgradient selection. Linear losses carry their coefficient vector so that
// callers can use closed forms.
class CostSpec {
 public:
  using ValueFn = std::function<double(const Vec&)>;
  using SubgradFn = std::function<Vec(const Vec&)>;

  CostSpec() = default;  // linear with empty coefficients (dimension 0)

  // Declaring a Lipschitz bound makes reported subgradients checked against it.
  static CostSpec linear(Vec coefficients, std::optional<double> lipschitz = std::nullopt);
  static CostSpec general(int dim, ValueFn value, SubgradFn subgrad,
                          std::optional<double> lipschitz = std::nullopt);

  bool is_linear() const { return linear_; }
  int dim() const { return dim_; }
  const Vec& coefficients() const;
  std::optional<double> lipschitz() const { return lipschitz_; }

  double value(const Vec& x) const;
  Vec subgradient_at(const Vec& x) const;

 private:
  bool linear_ = true;
  int dim_ = 0;
  Vec coeffs_;
  ValueFn value_;
  SubgradFn subgrad_;
  std::optional<double> lipschitz_;
};

using PredictionSpec = CostSpec;

double evaluate(const CostSpec& spec, const Vec& x);
Vec subgradient(const CostSpec& spec, const Vec& x);

// ||g - g_pred||
double prediction_error(const Vec& g, const Vec& g_pred);

// Convenience oracles.
CostSpec zero_prediction(int dim);
CostSpec quadratic_around(Vec center);  // 0.5 * ||x - center||^2
CostSpec abs_value_1d();                // |x|; subgradient 0 at the kink

}  // namespace optfprl
