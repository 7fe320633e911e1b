#pragma once

#include <functional>
#include <vector>

#include "dofw/common.hpp"
#include "dofw/geometry.hpp"
#include "dofw/losses.hpp"

// Ground truth used only by tests, the acceptance suite, and the gapcheck
// command.  Everything here is implemented independently of the solver
// update code (plain scalar arithmetic, no shared kernels) so that a bug in
// the solvers cannot hide behind the same bug here.
namespace dofw::oracle {

// argmin over the set of eta*<gbar, y> + ||y - y1||^2.  The Hessian is
// 2*I, so the constrained minimizer is the projection of the unconstrained
// vertex y1 - (eta/2) * gbar.
Vector exact_surrogate_min_convex(const FeasibleSet& set, const Vector& gbar,
                                  const Vector& y1, double eta);

// argmin over the set of <gbar, y> + sum_{i=1..tau} (beta/2)||y - y_i||^2
// given ysum = sum of y_i.  Hessian is beta*tau*I; the minimizer is the
// projection of ysum/tau - gbar/(beta*tau).
Vector exact_surrogate_min_sc(const FeasibleSet& set, const Vector& gbar,
                              const Vector& ysum, long tau, double beta);

// Textbook non-delayed online Frank-Wolfe for convex losses, one step per
// gradient, exact line search.  Scalar arithmetic throughout.
class ReferenceOfwConvex {
 public:
  ReferenceOfwConvex(Vector x1, double eta);
  const Vector& play() const { return x_; }
  void step(const Vector& g, const FeasibleSet& set);

 private:
  Vector x1_;
  Vector x_;
  Vector gsum_;
  double eta_;
};

// Non-delayed online Frank-Wolfe for strongly convex losses (surrogate
// regularized at every past decision, tau-scaled line search).
class ReferenceOfwStronglyConvex {
 public:
  ReferenceOfwStronglyConvex(Vector x1, double beta);
  const Vector& play() const { return x_; }
  void step(const Vector& g, const FeasibleSet& set);

 private:
  Vector x_;
  Vector gsum_;
  Vector xsum_;
  long tau_ = 1;
  double beta_;
};

// Full trajectory y_1..y_{m+1} for a fixed gradient list.
std::vector<Vector> reference_ofw_convex(const FeasibleSet& set,
                                         const std::vector<Vector>& gradients,
                                         const Vector& y1, double eta);

// Full trajectory for gradients evaluated at the played point, as a
// non-delayed strongly convex run would query them.
std::vector<Vector> reference_ofw_strongly_convex(
    const FeasibleSet& set,
    const std::function<Vector(long, const Vector&)>& gradient_at, long horizon,
    const Vector& y1, double beta);

struct ComparatorResult {
  enum class Method { closed_form_linear, closed_form_quadratic, offline_fw };

  Vector x_star;
  double offline_total = 0.0;  // sum_t f_t(x_star), summed in round order
  Method method = Method::offline_fw;
  double certified_gap = 0.0;  // duality-gap bound on suboptimality
  bool converged = true;       // offline_fw only: gap target reached
};

const char* method_name(ComparatorResult::Method m);

// Best fixed decision in hindsight.  Exact closed forms for the two stream
// kinds this artifact ships; offline Frank-Wolfe otherwise / for
// cross-checks.
ComparatorResult offline_comparator(const FeasibleSet& set,
                                    const LossStream& stream);

// Frank-Wolfe minimization of sum_t f_t over the set with a duality-gap
// certificate.  Failure to reach the gap within the cap is reported via
// `converged`/`certified_gap`, not fatal.
ComparatorResult offline_comparator_fw(const FeasibleSet& set,
                                       const LossStream& stream,
                                       long max_iterations = 100000,
                                       double gap_target = 1e-8);

// Brute-force oracle for the line-search rules: argmin over the grid
// sigma in {0, 1e-4, 2e-4, ..., 1} of <sigma*dir, grad> +
// curvature * sigma^2 * ||dir||^2.
double grid_line_search(const Vector& grad, const Vector& dir,
                        double curvature);

}  // namespace dofw::oracle
