#pragma once

#include "optfprl/vec.hpp"

namespace optfprl {

enum class SetKind { ball, box };

// Compact convex feasible region with a closed-form Euclidean projection and
// closed-form minimizers of <c,x> and <c,x> + (s/2)||x||^2.
//
// Membership uses an absolute boundary tolerance (default 1e-12) so that
// points placed exactly on the boundary by `project` still count as members.
class FeasibleSet {
 public:
  static FeasibleSet ball(int dim, double radius);
  static FeasibleSet box(Vec half_widths);

  SetKind kind() const { return kind_; }
  int dim() const { return dim_; }
  // Circumscribed-ball radius; for a box this is the norm of the half widths.
  double radius() const { return radius_; }
  double boundary_tol() const { return tol_; }
  void set_boundary_tol(double tol) { tol_ = tol; }
  const Vec& half_widths() const;

  Vec project(const Vec& y) const;
  bool contains(const Vec& y) const;

  // argmin over the set of <c,x>; ties (c = 0, or zero box coordinates) break
  // toward the origin.
  Vec linear_argmin(const Vec& c) const;

  // argmin over the set of <c,x> + (s/2)||x||^2 with s >= 0; s = 0 falls back
  // to linear_argmin.
  Vec linear_quadratic_argmin(const Vec& c, double s) const;

  // Axis-aligned bounding box (used by grid scans).
  void bounding_box(Vec& lo, Vec& hi) const;

 private:
  FeasibleSet() = default;

  SetKind kind_ = SetKind::ball;
  int dim_ = 0;
  double radius_ = 0.0;
  Vec half_widths_;
  double tol_ = 1e-12;
};

}  // namespace optfprl
