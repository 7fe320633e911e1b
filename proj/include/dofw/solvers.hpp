#pragma once

#include <vector>

#include "dofw/common.hpp"
#include "dofw/geometry.hpp"

namespace dofw {

// Step-size constants from the regret analysis.
// General sets: D / (sqrt(2) * G * (T+2)^(3/4)).
double eta_general(double diameter, double gradient_bound, long horizon);
// Strongly convex sets: D / (2 * G * (T+2)^(2/3)).
double eta_strongly_convex_set(double diameter, double gradient_bound,
                               long horizon);

// Exact minimizer over sigma in [0,1] of
//   <sigma * dir, grad> + sigma^2 ||dir||^2
// (the one-dimensional model is a convex quadratic; the clamped vertex is
// exact).  dir = 0 returns 0.
double line_search_convex(const Vector& grad, const Vector& dir);

// Exact minimizer over sigma in [0,1] of
//   <sigma * dir, grad> + (beta * tau / 2) * sigma^2 ||dir||^2
double line_search_strongly_convex(const Vector& grad, const Vector& dir,
                                   double beta, long tau);

// Delayed online Frank-Wolfe for convex losses.  One Frank-Wolfe step per
// received gradient against the surrogate
//   F_tau(y) = eta * <gbar_tau, y> + ||y - y1||^2,
// playing the latest intermediate decision each round.  Gradients arrive in
// whatever order the feedback queue releases them; the solver never sees
// the delays themselves.
class ConvexOfw {
 public:
  ConvexOfw(Vector y1, double eta);

  // current intermediate decision y_tau; never mutates
  const Vector& play() const { return y_; }

  // one update: gbar += g, then a linear-optimization step with exact
  // line search; the new decision is a convex combination, so it stays
  // feasible
  void ingest(const Vector& g, const FeasibleSet& set);

  // gradient of the current surrogate at `at` (gbar must already include
  // the gradient being processed): eta * gbar + 2 (at - y1)
  Vector surrogate_gradient(const Vector& at) const;

  long tau() const { return tau_; }
  double eta() const { return eta_; }
  const Vector& anchor() const { return y1_; }         // y_1
  const Vector& gradient_sum() const { return gbar_; }  // gbar_(tau-1)

 private:
  Vector y1_;
  Vector y_;
  Vector gbar_;
  long tau_ = 1;  // 1 + number of gradients ingested
  double eta_;
};

// Delayed online Frank-Wolfe for strongly convex losses.  Surrogate
//   F_tau(y) = <gbar_tau, y> + sum_{i=1..tau} (beta/2) ||y - y_i||^2,
// with the tau-scaled line search.  Keeps the running sum of intermediate
// decisions instead of their history.
class StronglyConvexOfw {
 public:
  StronglyConvexOfw(Vector y1, double beta);

  const Vector& play() const { return y_; }
  void ingest(const Vector& g, const FeasibleSet& set);

  // gbar + beta * (tau * at - ysum); preconditions as in ConvexOfw
  Vector surrogate_gradient(const Vector& at) const;

  long tau() const { return tau_; }
  double beta() const { return beta_; }
  const Vector& gradient_sum() const { return gbar_; }
  // sum of y_1..y_tau (includes the current decision)
  const Vector& decision_sum() const { return ysum_; }

 private:
  Vector y_;
  Vector gbar_;
  Vector ysum_;
  long tau_ = 1;
  double beta_;
};

// Delayed online gradient descent baseline: one projected step per round
// with the sum of the gradients that arrived that round.
class DelayedOgd {
 public:
  DelayedOgd(Vector x0, double step);

  const Vector& play() const { return x_; }

  // x <- project(x - step * sum(arrivals)); no-op when arrivals is empty
  void step_with(const std::vector<Vector>& arrivals, const FeasibleSet& set);

  double step() const { return step_; }

 private:
  Vector x_;
  double step_;
};

}  // namespace dofw
