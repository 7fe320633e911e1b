#include "dofw/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "dofw/vector_ops.hpp"

namespace dofw {

FeasibleSet::FeasibleSet(std::size_t dim, double diameter,
                         double strong_convexity)
    : dim_(dim), diameter_(diameter), strong_convexity_(strong_convexity) {
  if (dim == 0) throw ConfigError("set dimension must be positive");
}

Vector FeasibleSet::lmo(const Vector& g) const {
  require_dimension(dim_, g, "lmo objective");
  require_finite(g, "lmo objective");
  return lmo_impl(g);
}

Vector FeasibleSet::project(const Vector& x) const {
  require_dimension(dim_, x, "projection input");
  require_finite(x, "projection input");
  return project_impl(x);
}

bool FeasibleSet::contains(const Vector& x, double tol) const {
  require_dimension(dim_, x, "membership input");
  if (tol < 0) throw ContractViolation("membership tolerance must be >= 0");
  return contains_impl(x, tol);
}

// ---------------------------------------------------------------------------
// L2Ball

L2Ball::L2Ball(Vector center, double radius)
    : FeasibleSet(center.size(), 2.0 * radius, 1.0 / radius),
      center_(std::move(center)),
      radius_(radius) {
  if (!(radius > 0)) throw ConfigError("ball radius must be > 0");
  require_finite(center_, "ball center");
}

Vector L2Ball::lmo_impl(const Vector& g) const {
  double gn = norm(g);
  if (gn == 0.0) return center_;  // every point minimizes; center is canonical
  return combine(1.0, center_, -radius_ / gn, g);
}

Vector L2Ball::project_impl(const Vector& x) const {
  Vector delta = subtract(x, center_);
  double dist = norm(delta);
  if (dist <= radius_) return x;
  return combine(1.0, center_, radius_ / dist, delta);
}

bool L2Ball::contains_impl(const Vector& x, double tol) const {
  return distance(x, center_) <= radius_ + tol;
}

Vector L2Ball::sample(Rng& rng) const {
  // uniform over the ball: random direction, radius ~ r * u^(1/n)
  std::size_t n = dimension();
  Vector dir(n);
  double dn = 0.0;
  do {
    for (std::size_t i = 0; i < n; ++i) dir[i] = rng.normal();
    dn = norm(dir);
  } while (dn < 1e-12);
  double r = radius_ * std::pow(rng.uniform01(), 1.0 / static_cast<double>(n));
  return combine(1.0, center_, r / dn, dir);
}

// ---------------------------------------------------------------------------
// Box

namespace {
double box_diameter(const Vector& lo, const Vector& hi) {
  double s = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    double d = hi[i] - lo[i];
    s += d * d;
  }
  return std::sqrt(s);
}
}  // namespace

Box::Box(Vector lo, Vector hi)
    : FeasibleSet(lo.size(), box_diameter(lo, hi), 0.0),
      lo_(std::move(lo)),
      hi_(std::move(hi)) {
  require_finite(lo_, "box lower bound");
  if (hi_.size() != lo_.size()) throw ConfigError("box lo/hi size mismatch");
  require_finite(hi_, "box upper bound");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (!(lo_[i] < hi_[i]))
      throw ConfigError("box requires lo < hi in every coordinate");
  }
}

Vector Box::lmo_impl(const Vector& g) const {
  Vector out(dimension());
  // g_i > 0 -> lo_i, otherwise hi_i (hi on tie)
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = g[i] > 0.0 ? lo_[i] : hi_[i];
  return out;
}

Vector Box::project_impl(const Vector& x) const {
  Vector out(dimension());
  kernels::clamp(out.data(), x.data(), lo_.data(), hi_.data(), out.size());
  return out;
}

bool Box::contains_impl(const Vector& x, double tol) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < lo_[i] - tol || x[i] > hi_[i] + tol) return false;
  }
  return true;
}

Vector Box::sample(Rng& rng) const {
  Vector out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = rng.uniform(lo_[i], hi_[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::size_t dim, double scale)
    : FeasibleSet(dim, scale * std::sqrt(2.0), 0.0), scale_(scale) {
  if (!(scale > 0)) throw ConfigError("simplex scale must be > 0");
}

Vector Simplex::lmo_impl(const Vector& g) const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    if (g[i] < g[best]) best = i;  // strict: lowest index wins ties
  }
  Vector out(dimension(), 0.0);
  out[best] = scale_;
  return out;
}

Vector Simplex::project_impl(const Vector& x) const {
  // sort-and-threshold simplex projection
  Vector u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cum += u[j];
    double t = (cum - scale_) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vector out(dimension());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::max(x[i] - theta, 0.0);
  return out;
}

bool Simplex::contains_impl(const Vector& x, double tol) const {
  for (double xi : x) {
    if (xi < -tol) return false;
  }
  return std::abs(sum(x) - scale_) <= tol;
}

Vector Simplex::sample(Rng& rng) const {
  // uniform over the simplex: normalized exponentials
  Vector out(dimension());
  double total = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = -std::log(1.0 - rng.uniform01());
    total += out[i];
  }
  scale_in_place(out, scale_ / total);
  return out;
}

}  // namespace dofw
