#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "dofw/common.hpp"
#include "dofw/geometry.hpp"

namespace dofw {

// Online adversary: a fixed sequence f_1..f_T of convex losses with bounded
// gradients. All randomness is drawn at construction from the seed, so
// value/gradient are pure and replayable regardless of the delay pattern.
class LossStream {
 public:
  virtual ~LossStream() = default;

  long horizon() const { return horizon_; }
  double gradient_bound() const { return gradient_bound_; }  // G
  double strong_convexity() const { return strong_convexity_; }  // beta

  double value(long t, const Vector& x) const;
  Vector gradient(long t, const Vector& x) const;

  virtual const char* name() const = 0;
  // per-round parameters, one row per t, reals at 17 significant digits
  virtual void dump_csv(std::ostream& os) const = 0;

 protected:
  LossStream(long horizon, double gradient_bound, double strong_convexity);

  virtual double value_impl(long t, const Vector& x) const = 0;
  virtual Vector gradient_impl(long t, const Vector& x) const = 0;

  void check_round(long t) const;

 private:
  long horizon_;
  double gradient_bound_;
  double strong_convexity_;
};

// f_t(x) = <g_t, x> with g_t drawn once, uniformly on the radius-G sphere.
class LinearStream final : public LossStream {
 public:
  LinearStream(long horizon, std::size_t dim, double gradient_bound,
               std::uint64_t seed);
  // explicit gradient sequence (used by tests)
  LinearStream(std::vector<Vector> gradients, double gradient_bound);

  const Vector& round_gradient(long t) const;
  const char* name() const override { return "linear"; }
  void dump_csv(std::ostream& os) const override;

 protected:
  double value_impl(long t, const Vector& x) const override;
  Vector gradient_impl(long t, const Vector& x) const override;

 private:
  std::vector<Vector> gradients_;
};

// f_t(x) = (beta/2) ||x - theta_t||^2 with theta_t drawn uniformly from the
// feasible set, so G = beta * D holds.
class QuadraticStream final : public LossStream {
 public:
  QuadraticStream(const FeasibleSet& set, long horizon, double beta,
                  std::uint64_t seed);
  // explicit targets (used by tests); G is taken as beta * diameter
  QuadraticStream(std::vector<Vector> targets, double beta, double diameter);

  const Vector& target(long t) const;
  const char* name() const override { return "quadratic"; }
  void dump_csv(std::ostream& os) const override;

 protected:
  double value_impl(long t, const Vector& x) const override;
  Vector gradient_impl(long t, const Vector& x) const override;

 private:
  std::vector<Vector> targets_;
  double beta_;
};

}  // namespace dofw
