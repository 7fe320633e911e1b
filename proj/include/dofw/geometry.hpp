#pragma once

#include <cstddef>
#include <memory>

#include "dofw/common.hpp"
#include "dofw/rng.hpp"

namespace dofw {

// Capability bundle for a convex decision set: linear minimization oracle,
// Euclidean projection, membership test, diameter and strong-convexity
// modulus (0 for general sets). Immutable after construction; all
// operations are pure and thread-safe.
class FeasibleSet {
 public:
  static constexpr double kMembershipTol = 1e-9;

  virtual ~FeasibleSet() = default;

  std::size_t dimension() const { return dim_; }
  double diameter() const { return diameter_; }
  double strong_convexity() const { return strong_convexity_; }
  virtual const char* name() const = 0;

  // argmin_{x in K} <g, x>; exact closed form per set.
  Vector lmo(const Vector& g) const;

  // Euclidean projection onto the set.
  Vector project(const Vector& x) const;

  // Membership with additive tolerance on every defining constraint.
  bool contains(const Vector& x, double tol = kMembershipTol) const;

  // Uniform draw from the set; used by loss streams and property tests.
  virtual Vector sample(Rng& rng) const = 0;

 protected:
  FeasibleSet(std::size_t dim, double diameter, double strong_convexity);

  virtual Vector lmo_impl(const Vector& g) const = 0;
  virtual Vector project_impl(const Vector& x) const = 0;
  virtual bool contains_impl(const Vector& x, double tol) const = 0;

 private:
  std::size_t dim_;
  double diameter_;
  double strong_convexity_;
};

// Euclidean ball {x : ||x - center|| <= radius}.  Strongly convex with
// modulus 1/radius.
class L2Ball final : public FeasibleSet {
 public:
  L2Ball(Vector center, double radius);

  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  const char* name() const override { return "l2ball"; }
  Vector sample(Rng& rng) const override;

 protected:
  Vector lmo_impl(const Vector& g) const override;
  Vector project_impl(const Vector& x) const override;
  bool contains_impl(const Vector& x, double tol) const override;

 private:
  Vector center_;
  double radius_;
};

// Axis-aligned box {x : lo <= x <= hi}, lo < hi elementwise.
class Box final : public FeasibleSet {
 public:
  Box(Vector lo, Vector hi);

  const Vector& lo() const { return lo_; }
  const Vector& hi() const { return hi_; }
  const char* name() const override { return "box"; }
  Vector sample(Rng& rng) const override;

 protected:
  Vector lmo_impl(const Vector& g) const override;
  Vector project_impl(const Vector& x) const override;
  bool contains_impl(const Vector& x, double tol) const override;

 private:
  Vector lo_;
  Vector hi_;
};

// Scaled probability simplex {x >= 0 : sum x_i = scale}.
class Simplex final : public FeasibleSet {
 public:
  Simplex(std::size_t dim, double scale);

  double scale() const { return scale_; }
  const char* name() const override { return "simplex"; }
  Vector sample(Rng& rng) const override;

 protected:
  Vector lmo_impl(const Vector& g) const override;
  Vector project_impl(const Vector& x) const override;
  bool contains_impl(const Vector& x, double tol) const override;

 private:
  double scale_;
};

}  // namespace dofw
