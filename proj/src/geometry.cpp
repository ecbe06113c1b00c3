#include "optfprl/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace optfprl {

namespace {
void check_dim(const Vec& y, int dim, const char* where) {
  if (static_cast<int>(y.size()) != dim) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(y.size()) + " vs " + std::to_string(dim) + ")");
  }
}
}  // namespace

FeasibleSet FeasibleSet::ball(int dim, double radius) {
  if (dim <= 0) throw std::invalid_argument("ball: dimension must be positive");
  if (radius <= 0.0) throw std::invalid_argument("ball: radius must be positive");
  FeasibleSet s;
  s.kind_ = SetKind::ball;
  s.dim_ = dim;
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::box(Vec half_widths) {
  if (half_widths.empty()) throw std::invalid_argument("box: dimension must be positive");
  for (double w : half_widths)
    if (w <= 0.0) throw std::invalid_argument("box: half widths must be positive");
  FeasibleSet s;
  s.kind_ = SetKind::box;
  s.dim_ = static_cast<int>(half_widths.size());
  s.radius_ = norm(half_widths);
  s.half_widths_ = std::move(half_widths);
  return s;
}

const Vec& FeasibleSet::half_widths() const {
  if (kind_ != SetKind::box) throw std::logic_error("half_widths: not a box set");
  return half_widths_;
}

Vec FeasibleSet::project(const Vec& y) const {
  check_dim(y, dim_, "project");
  if (kind_ == SetKind::ball) {
    const double n = norm(y);
    // Points within the boundary tolerance count as members (so projecting is
    // exactly idempotent despite the rescaling round-off).
    if (n <= radius_ + tol_) return y;
    return scaled(y, radius_ / n);
  }
  Vec r(y);
  for (int i = 0; i < dim_; ++i) r[i] = std::clamp(r[i], -half_widths_[i], half_widths_[i]);
  return r;
}

bool FeasibleSet::contains(const Vec& y) const {
  check_dim(y, dim_, "contains");
  if (kind_ == SetKind::ball) return norm(y) <= radius_ + tol_;
  for (int i = 0; i < dim_; ++i)
    if (std::abs(y[i]) > half_widths_[i] + tol_) return false;
  return true;
}

Vec FeasibleSet::linear_argmin(const Vec& c) const {
  check_dim(c, dim_, "linear_argmin");
  if (kind_ == SetKind::ball) {
    const double n = norm(c);
    if (n == 0.0) return zeros(dim_);
    return scaled(c, -radius_ / n);
  }
  Vec r(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    if (c[i] > 0.0)
      r[i] = -half_widths_[i];
    else if (c[i] < 0.0)
      r[i] = half_widths_[i];
  }
  return r;
}

Vec FeasibleSet::linear_quadratic_argmin(const Vec& c, double s) const {
  check_dim(c, dim_, "linear_quadratic_argmin");
  if (s < 0.0) throw std::invalid_argument("linear_quadratic_argmin: s must be nonnegative");
  if (s == 0.0) return linear_argmin(c);
  // Unconstrained minimizer -c/s, pulled back onto the set. For scaled
  // Euclidean objectives the projection of the unconstrained minimizer is the
  // constrained minimizer.
  return project(scaled(c, -1.0 / s));
}

void FeasibleSet::bounding_box(Vec& lo, Vec& hi) const {
  lo.assign(dim_, 0.0);
  hi.assign(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    const double w = (kind_ == SetKind::ball) ? radius_ : half_widths_[i];
    lo[i] = -w;
    hi[i] = w;
  }
}

}  // namespace optfprl
