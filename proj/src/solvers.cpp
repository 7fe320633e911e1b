#include "dofw/solvers.hpp"

#include <algorithm>
#include <cmath>

#include "dofw/vector_ops.hpp"

namespace dofw {

namespace {
void check_eta_inputs(double diameter, double gradient_bound, long horizon) {
  if (!(diameter > 0)) throw ContractViolation("eta: diameter must be > 0");
  if (!(gradient_bound > 0))
    throw ContractViolation("eta: gradient bound must be > 0");
  if (horizon < 1) throw ContractViolation("eta: horizon must be >= 1");
}
}  // namespace

double eta_general(double diameter, double gradient_bound, long horizon) {
  check_eta_inputs(diameter, gradient_bound, horizon);
  return diameter / (std::sqrt(2.0) * gradient_bound *
                     std::pow(static_cast<double>(horizon) + 2.0, 0.75));
}

double eta_strongly_convex_set(double diameter, double gradient_bound,
                               long horizon) {
  check_eta_inputs(diameter, gradient_bound, horizon);
  return diameter / (2.0 * gradient_bound *
                     std::pow(static_cast<double>(horizon) + 2.0, 2.0 / 3.0));
}

double line_search_convex(const Vector& grad, const Vector& dir) {
  double dir_sq = squared_norm(dir);
  if (dir_sq == 0.0) return 0.0;
  double slope = dot(dir, grad);
  return std::clamp(-slope / (2.0 * dir_sq), 0.0, 1.0);
}

double line_search_strongly_convex(const Vector& grad, const Vector& dir,
                                   double beta, long tau) {
  double dir_sq = squared_norm(dir);
  if (dir_sq == 0.0) return 0.0;
  double slope = dot(dir, grad);
  return std::clamp(-slope / (beta * static_cast<double>(tau) * dir_sq), 0.0,
                    1.0);
}

// ---------------------------------------------------------------------------
// ConvexOfw

ConvexOfw::ConvexOfw(Vector y1, double eta)
    : y1_(y1), y_(std::move(y1)), gbar_(y_.size(), 0.0), eta_(eta) {
  require_finite(y_, "initial decision");
  if (!(eta > 0)) throw ContractViolation("eta must be > 0");
}

Vector ConvexOfw::surrogate_gradient(const Vector& at) const {
  return combine(eta_, gbar_, 2.0, at, -2.0, y1_);
}

void ConvexOfw::ingest(const Vector& g, const FeasibleSet& set) {
  require_dimension(y_.size(), g, "ingested gradient");
  require_finite(g, "ingested gradient");
  add_scaled(gbar_, 1.0, g);
  Vector grad = surrogate_gradient(y_);
  Vector v = set.lmo(grad);
  Vector dir = subtract(v, y_);
  double sigma = line_search_convex(grad, dir);
  move_toward(y_, v, sigma);
  ++tau_;
}

// ---------------------------------------------------------------------------
// StronglyConvexOfw

StronglyConvexOfw::StronglyConvexOfw(Vector y1, double beta)
    : y_(std::move(y1)), gbar_(y_.size(), 0.0), ysum_(y_), beta_(beta) {
  require_finite(y_, "initial decision");
  if (!(beta > 0)) throw ContractViolation("beta must be > 0");
}

Vector StronglyConvexOfw::surrogate_gradient(const Vector& at) const {
  return combine(1.0, gbar_, beta_ * static_cast<double>(tau_), at, -beta_,
                 ysum_);
}

void StronglyConvexOfw::ingest(const Vector& g, const FeasibleSet& set) {
  require_dimension(y_.size(), g, "ingested gradient");
  require_finite(g, "ingested gradient");
  add_scaled(gbar_, 1.0, g);
  Vector grad = surrogate_gradient(y_);
  Vector v = set.lmo(grad);
  Vector dir = subtract(v, y_);
  double sigma = line_search_strongly_convex(grad, dir, beta_, tau_);
  move_toward(y_, v, sigma);
  ++tau_;
  add_scaled(ysum_, 1.0, y_);  // ysum now covers y_1..y_tau
}

// ---------------------------------------------------------------------------
// DelayedOgd

DelayedOgd::DelayedOgd(Vector x0, double step)
    : x_(std::move(x0)), step_(step) {
  require_finite(x_, "initial decision");
  if (!(step > 0)) throw ContractViolation("OGD step must be > 0");
}

void DelayedOgd::step_with(const std::vector<Vector>& arrivals,
                           const FeasibleSet& set) {
  if (arrivals.empty()) return;
  Vector total(x_.size(), 0.0);
  for (const Vector& g : arrivals) {
    require_dimension(x_.size(), g, "OGD arrival");
    add_scaled(total, 1.0, g);
  }
  add_scaled(x_, -step_, total);
  x_ = set.project(x_);
}

}  // namespace dofw
