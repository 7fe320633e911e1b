#include "dofw/losses.hpp"

#include <ostream>

#include "dofw/rng.hpp"
#include "dofw/vector_ops.hpp"
#include "format_util.hpp"

namespace dofw {

LossStream::LossStream(long horizon, double gradient_bound,
                       double strong_convexity)
    : horizon_(horizon),
      gradient_bound_(gradient_bound),
      strong_convexity_(strong_convexity) {
  if (horizon < 1) throw ConfigError("stream horizon must be >= 1");
  if (!(gradient_bound > 0)) throw ConfigError("gradient bound must be > 0");
}

void LossStream::check_round(long t) const {
  if (t < 1 || t > horizon_) {
    throw ContractViolation("round index " + std::to_string(t) +
                            " outside [1, " + std::to_string(horizon_) + "]");
  }
}

double LossStream::value(long t, const Vector& x) const {
  check_round(t);
  return value_impl(t, x);
}

Vector LossStream::gradient(long t, const Vector& x) const {
  check_round(t);
  return gradient_impl(t, x);
}

// ---------------------------------------------------------------------------
// LinearStream

LinearStream::LinearStream(long horizon, std::size_t dim,
                           double gradient_bound, std::uint64_t seed)
    : LossStream(horizon, gradient_bound, 0.0) {
  Rng rng(seed);
  gradients_.reserve(static_cast<std::size_t>(horizon));
  for (long t = 0; t < horizon; ++t) {
    Vector g(dim);
    double gn = 0.0;
    do {
      for (std::size_t i = 0; i < dim; ++i) g[i] = rng.normal();
      gn = norm(g);
    } while (gn < 1e-12);
    scale_in_place(g, gradient_bound / gn);
    gradients_.push_back(std::move(g));
  }
}

LinearStream::LinearStream(std::vector<Vector> gradients,
                           double gradient_bound)
    : LossStream(static_cast<long>(gradients.size()), gradient_bound, 0.0),
      gradients_(std::move(gradients)) {
  for (const Vector& g : gradients_) require_finite(g, "linear stream gradient");
}

const Vector& LinearStream::round_gradient(long t) const {
  check_round(t);
  return gradients_[static_cast<std::size_t>(t - 1)];
}

double LinearStream::value_impl(long t, const Vector& x) const {
  return dot(round_gradient(t), x);
}

Vector LinearStream::gradient_impl(long t, const Vector&) const {
  return round_gradient(t);
}

void LinearStream::dump_csv(std::ostream& os) const {
  std::size_t dim = gradients_.front().size();
  os << "t";
  for (std::size_t i = 1; i <= dim; ++i) os << ",g_" << i;
  os << "\n";
  for (long t = 1; t <= horizon(); ++t) {
    os << t;
    for (double v : round_gradient(t)) os << "," << format_real(v);
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// QuadraticStream

QuadraticStream::QuadraticStream(const FeasibleSet& set, long horizon,
                                 double beta, std::uint64_t seed)
    : LossStream(horizon, beta * set.diameter(), beta), beta_(beta) {
  if (!(beta > 0)) throw ConfigError("quadratic stream requires beta > 0");
  Rng rng(seed);
  targets_.reserve(static_cast<std::size_t>(horizon));
  for (long t = 0; t < horizon; ++t) targets_.push_back(set.sample(rng));
}

QuadraticStream::QuadraticStream(std::vector<Vector> targets, double beta,
                                 double diameter)
    : LossStream(static_cast<long>(targets.size()), beta * diameter, beta),
      targets_(std::move(targets)),
      beta_(beta) {
  if (!(beta > 0)) throw ConfigError("quadratic stream requires beta > 0");
}

const Vector& QuadraticStream::target(long t) const {
  check_round(t);
  return targets_[static_cast<std::size_t>(t - 1)];
}

double QuadraticStream::value_impl(long t, const Vector& x) const {
  Vector d = subtract(x, target(t));
  return 0.5 * beta_ * squared_norm(d);
}

Vector QuadraticStream::gradient_impl(long t, const Vector& x) const {
  return combine(beta_, x, -beta_, target(t));
}

void QuadraticStream::dump_csv(std::ostream& os) const {
  std::size_t dim = targets_.front().size();
  os << "t";
  for (std::size_t i = 1; i <= dim; ++i) os << ",theta_" << i;
  os << "\n";
  for (long t = 1; t <= horizon(); ++t) {
    os << t;
    for (double v : target(t)) os << "," << format_real(v);
    os << "\n";
  }
}

}  // namespace dofw
