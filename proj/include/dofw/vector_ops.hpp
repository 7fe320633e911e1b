#pragma once

#include <cmath>

#include "dofw/common.hpp"
#include "dofw/kernels.hpp"

// std::vector-level wrappers over the kernel layer.
namespace dofw {

inline double dot(const Vector& x, const Vector& y) {
  return kernels::dot(x.data(), y.data(), x.size());
}

inline double squared_norm(const Vector& x) {
  return kernels::squared_norm(x.data(), x.size());
}

inline double norm(const Vector& x) { return std::sqrt(squared_norm(x)); }

inline double sum(const Vector& x) { return kernels::sum(x.data(), x.size()); }

// y += a * x
inline void add_scaled(Vector& y, double a, const Vector& x) {
  kernels::axpy(a, x.data(), y.data(), y.size());
}

// y += s * (v - y)
inline void move_toward(Vector& y, const Vector& v, double s) {
  kernels::lerp_toward(y.data(), v.data(), s, y.size());
}

inline Vector combine(double a, const Vector& x, double b, const Vector& y) {
  Vector out(x.size());
  kernels::weighted_sum2(out.data(), a, x.data(), b, y.data(), x.size());
  return out;
}

inline Vector combine(double a, const Vector& x, double b, const Vector& y,
                      double c, const Vector& z) {
  Vector out(x.size());
  kernels::weighted_sum3(out.data(), a, x.data(), b, y.data(), c, z.data(),
                         x.size());
  return out;
}

inline Vector subtract(const Vector& a, const Vector& b) {
  return combine(1.0, a, -1.0, b);
}

inline void scale_in_place(Vector& x, double a) {
  kernels::scale(a, x.data(), x.size());
}

inline double distance(const Vector& a, const Vector& b) {
  return norm(subtract(a, b));
}

}  // namespace dofw
