#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace optfprl {

using Vec = std::vector<double>;

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

inline Vec zeros(std::size_t dim) { return Vec(dim, 0.0); }

inline double dot(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double sq_norm(const Vec& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(sq_norm(a)); }

inline double dist(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "dist");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// y += a * x
inline void axpy(double a, const Vec& x, Vec& y) {
  check_same_dim(x, y, "axpy");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline Vec sum(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "sum");
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec diff(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "diff");
  Vec r(a);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec scaled(const Vec& a, double s) {
  Vec r(a);
  for (double& v : r) v *= s;
  return r;
}

inline Vec negated(const Vec& a) { return scaled(a, -1.0); }

inline bool is_zero(const Vec& a) {
  for (double v : a)
    if (v != 0.0) return false;
  return true;
}

}  // namespace optfprl
