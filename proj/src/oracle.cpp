#include "dofw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dofw::oracle {

// Local scalar helpers: the reference implementations must not share
// arithmetic with the solver path.
namespace {

double sdot(const Vector& a, const Vector& b) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

double snorm_sq(const Vector& a) { return sdot(a, a); }

Vector ssub(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

Vector exact_surrogate_min_convex(const FeasibleSet& set, const Vector& gbar,
                                  const Vector& y1, double eta) {
  Vector vertex(y1.size());
  for (std::size_t i = 0; i < vertex.size(); ++i)
    vertex[i] = y1[i] - 0.5 * eta * gbar[i];
  return set.project(vertex);
}

Vector exact_surrogate_min_sc(const FeasibleSet& set, const Vector& gbar,
                              const Vector& ysum, long tau, double beta) {
  if (tau < 1) throw ContractViolation("exact_surrogate_min_sc: tau >= 1");
  if (!(beta > 0)) throw ContractViolation("exact_surrogate_min_sc: beta > 0");
  double t = static_cast<double>(tau);
  Vector vertex(ysum.size());
  for (std::size_t i = 0; i < vertex.size(); ++i)
    vertex[i] = ysum[i] / t - gbar[i] / (beta * t);
  return set.project(vertex);
}

// ---------------------------------------------------------------------------
// Reference OFW steppers

ReferenceOfwConvex::ReferenceOfwConvex(Vector x1, double eta)
    : x1_(x1), x_(std::move(x1)), gsum_(x_.size(), 0.0), eta_(eta) {}

void ReferenceOfwConvex::step(const Vector& g, const FeasibleSet& set) {
  for (std::size_t i = 0; i < gsum_.size(); ++i) gsum_[i] += g[i];
  Vector grad(x_.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    grad[i] = eta_ * gsum_[i] + 2.0 * (x_[i] - x1_[i]);
  Vector v = set.lmo(grad);
  Vector dir = ssub(v, x_);
  double dir_sq = snorm_sq(dir);
  double sigma = 0.0;
  if (dir_sq > 0.0)
    sigma = std::clamp(-sdot(dir, grad) / (2.0 * dir_sq), 0.0, 1.0);
  for (std::size_t i = 0; i < x_.size(); ++i)
    x_[i] = x_[i] + sigma * (v[i] - x_[i]);
}

ReferenceOfwStronglyConvex::ReferenceOfwStronglyConvex(Vector x1, double beta)
    : x_(std::move(x1)), gsum_(x_.size(), 0.0), xsum_(x_), beta_(beta) {}

void ReferenceOfwStronglyConvex::step(const Vector& g, const FeasibleSet& set) {
  for (std::size_t i = 0; i < gsum_.size(); ++i) gsum_[i] += g[i];
  double t = static_cast<double>(tau_);
  Vector grad(x_.size());
  for (std::size_t i = 0; i < grad.size(); ++i)
    grad[i] = gsum_[i] + beta_ * (t * x_[i] - xsum_[i]);
  Vector v = set.lmo(grad);
  Vector dir = ssub(v, x_);
  double dir_sq = snorm_sq(dir);
  double sigma = 0.0;
  if (dir_sq > 0.0)
    sigma = std::clamp(-sdot(dir, grad) / (beta_ * t * dir_sq), 0.0, 1.0);
  for (std::size_t i = 0; i < x_.size(); ++i)
    x_[i] = x_[i] + sigma * (v[i] - x_[i]);
  ++tau_;
  for (std::size_t i = 0; i < xsum_.size(); ++i) xsum_[i] += x_[i];
}

std::vector<Vector> reference_ofw_convex(const FeasibleSet& set,
                                         const std::vector<Vector>& gradients,
                                         const Vector& y1, double eta) {
  ReferenceOfwConvex ofw(y1, eta);
  std::vector<Vector> trajectory;
  trajectory.reserve(gradients.size() + 1);
  trajectory.push_back(ofw.play());
  for (const Vector& g : gradients) {
    ofw.step(g, set);
    trajectory.push_back(ofw.play());
  }
  return trajectory;
}

std::vector<Vector> reference_ofw_strongly_convex(
    const FeasibleSet& set,
    const std::function<Vector(long, const Vector&)>& gradient_at,
    long horizon, const Vector& y1, double beta) {
  ReferenceOfwStronglyConvex ofw(y1, beta);
  std::vector<Vector> trajectory;
  trajectory.reserve(static_cast<std::size_t>(horizon) + 1);
  trajectory.push_back(ofw.play());
  for (long t = 1; t <= horizon; ++t) {
    ofw.step(gradient_at(t, ofw.play()), set);
    trajectory.push_back(ofw.play());
  }
  return trajectory;
}

// ---------------------------------------------------------------------------
// Offline comparator

const char* method_name(ComparatorResult::Method m) {
  switch (m) {
    case ComparatorResult::Method::closed_form_linear:
      return "closed_form_linear";
    case ComparatorResult::Method::closed_form_quadratic:
      return "closed_form_quadratic";
    case ComparatorResult::Method::offline_fw:
      return "offline_fw";
  }
  return "?";
}

namespace {

// Round-order sum of f_t(x); matches the harness accounting exactly.
double total_loss_at(const LossStream& stream, const Vector& x) {
  double total = 0.0;
  for (long t = 1; t <= stream.horizon(); ++t) total += stream.value(t, x);
  return total;
}

}  // namespace

ComparatorResult offline_comparator(const FeasibleSet& set,
                                    const LossStream& stream) {
  ComparatorResult result;
  if (const auto* linear = dynamic_cast<const LinearStream*>(&stream)) {
    Vector gsum(set.dimension(), 0.0);
    for (long t = 1; t <= stream.horizon(); ++t) {
      const Vector& g = linear->round_gradient(t);
      for (std::size_t i = 0; i < gsum.size(); ++i) gsum[i] += g[i];
    }
    result.x_star = set.lmo(gsum);
    result.method = ComparatorResult::Method::closed_form_linear;
  } else if (const auto* quad = dynamic_cast<const QuadraticStream*>(&stream)) {
    // sum_t (beta/2)||x - theta_t||^2 = (T beta/2)||x - mean||^2 + const,
    // so the constrained minimizer is the projection of the target mean.
    Vector mean(set.dimension(), 0.0);
    for (long t = 1; t <= stream.horizon(); ++t) {
      const Vector& th = quad->target(t);
      for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += th[i];
    }
    for (double& m : mean) m /= static_cast<double>(stream.horizon());
    result.x_star = set.project(mean);
    result.method = ComparatorResult::Method::closed_form_quadratic;
  } else {
    return offline_comparator_fw(set, stream);
  }
  result.offline_total = total_loss_at(stream, result.x_star);
  result.certified_gap = 0.0;
  return result;
}

ComparatorResult offline_comparator_fw(const FeasibleSet& set,
                                       const LossStream& stream,
                                       long max_iterations, double gap_target) {
  ComparatorResult result;
  result.method = ComparatorResult::Method::offline_fw;

  auto total_gradient = [&](const Vector& x) {
    Vector g(set.dimension(), 0.0);
    for (long t = 1; t <= stream.horizon(); ++t) {
      Vector gt = stream.gradient(t, x);
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += gt[i];
    }
    return g;
  };

  Vector x = set.lmo(Vector(set.dimension(), 0.0));
  double gap = std::numeric_limits<double>::infinity();
  for (long k = 0; k < max_iterations; ++k) {
    Vector grad = total_gradient(x);
    Vector v = set.lmo(grad);
    Vector dir = ssub(v, x);
    gap = -sdot(grad, dir);  // <grad, x - v>, certifies suboptimality
    if (gap <= gap_target) break;

    // Both shipped streams make sigma -> total_loss(x + sigma dir) a
    // polynomial of degree <= 2, so a three-point fit recovers it exactly:
    // phi(s) = p0 + B s + (A/2) s^2.
    auto phi = [&](double sigma) {
      Vector p(x.size());
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] + sigma * dir[i];
      return total_loss_at(stream, p);
    };
    double p0 = phi(0.0), ph = phi(0.5), p1 = phi(1.0);
    double curv = 4.0 * (p0 - 2.0 * ph + p1);          // A
    double slope0 = -3.0 * p0 + 4.0 * ph - p1;         // B
    double sigma;
    if (curv > 0.0) {
      sigma = std::clamp(-slope0 / curv, 0.0, 1.0);
    } else {
      sigma = (p1 < p0) ? 1.0 : 0.0;
    }
    if (sigma == 0.0) break;  // no progress possible along this direction
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += sigma * dir[i];
  }
  result.x_star = x;
  result.offline_total = total_loss_at(stream, x);
  result.certified_gap = std::max(gap, 0.0);
  result.converged = result.certified_gap <= gap_target;
  return result;
}

double grid_line_search(const Vector& grad, const Vector& dir,
                        double curvature) {
  if (!(curvature > 0))
    throw ContractViolation("grid_line_search: curvature must be > 0");
  double slope = sdot(dir, grad);
  double dir_sq = snorm_sq(dir);
  double best_sigma = 0.0;
  double best_value = 0.0;  // objective at sigma = 0
  constexpr double kStep = 1e-4;
  for (long i = 1; i <= 10000; ++i) {
    double sigma = static_cast<double>(i) * kStep;
    double value = sigma * slope + curvature * sigma * sigma * dir_sq;
    if (value < best_value) {
      best_value = value;
      best_sigma = sigma;
    }
  }
  return best_sigma;
}

}  // namespace dofw::oracle
