#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dofw/oracle.hpp"
#include "dofw/rng.hpp"
#include "dofw/solvers.hpp"
#include "dofw/vector_ops.hpp"

using namespace dofw;

TEST_CASE("exact convex surrogate minimizer") {
  Box box(Vector{-1.0, -1.0}, Vector{1.0, 1.0});

  // zero gradient sum: the anchor minimizes the regularizer
  Vector y1{0.25, -0.75};
  CHECK(oracle::exact_surrogate_min_convex(box, {0.0, 0.0}, y1, 0.7) == y1);

  // unconstrained vertex (-3, 0) projects to the box face
  Vector ymin =
      oracle::exact_surrogate_min_convex(box, {3.0, 0.0}, {0.0, 0.0}, 2.0);
  CHECK(ymin == Vector{-1.0, 0.0});

  // interior vertex is returned unchanged
  Vector interior =
      oracle::exact_surrogate_min_convex(box, {0.5, 0.5}, {0.0, 0.0}, 0.4);
  CHECK(interior[0] == doctest::Approx(-0.1));
  CHECK(interior[1] == doctest::Approx(-0.1));
}

TEST_CASE("convex surrogate minimizer matches a box grid search") {
  Box box(Vector{-1.0, -1.0}, Vector{1.0, 1.0});
  Vector gbar{3.0, 0.0};
  Vector y1{0.0, 0.0};
  double eta = 2.0;
  Vector ymin = oracle::exact_surrogate_min_convex(box, gbar, y1, eta);
  auto surrogate = [&](const Vector& y) {
    return eta * dot(gbar, y) + squared_norm(subtract(y, y1));
  };
  double best = surrogate(ymin);
  int steps = 200;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) {
      Vector y{-1.0 + 2.0 * i / steps, -1.0 + 2.0 * j / steps};
      CHECK(surrogate(y) >= best - 1e-9);
    }
  }
}

TEST_CASE("exact strongly convex surrogate minimizer") {
  Box box(Vector{-2.0, -2.0}, Vector{2.0, 2.0});

  // all decisions at an interior point c and zero gradients: minimizer is c
  Vector c{0.5, 0.5};
  Vector ysum = combine(3.0, c, 0.0, c);
  CHECK(oracle::exact_surrogate_min_sc(box, {0.0, 0.0}, ysum, 3, 1.5) == c);

  // tau=2, beta=1: vertex ysum/2 - gbar/2 = (0,0), interior
  Vector ymin =
      oracle::exact_surrogate_min_sc(box, {2.0, 0.0}, {2.0, 0.0}, 2, 1.0);
  CHECK(ymin == Vector{0.0, 0.0});
}

TEST_CASE("strongly convex minimizer outside the ball is radially projected") {
  L2Ball ball(Vector{0.0, 0.0}, 1.0);
  Vector gbar{-6.0, 0.0};
  Vector ysum{0.5, 0.0};
  long tau = 1;
  double beta = 1.0;
  Vector ymin = oracle::exact_surrogate_min_sc(ball, gbar, ysum, tau, beta);
  CHECK(norm(ymin) == doctest::Approx(1.0).epsilon(1e-12));

  // dense polar grid of the disk confirms the minimum
  auto surrogate = [&](const Vector& y) {
    return dot(gbar, y) + 0.5 * beta * squared_norm(subtract(y, ysum));
  };
  double best = surrogate(ymin);
  for (int r = 0; r <= 100; ++r) {
    for (int a = 0; a < 720; ++a) {
      double rad = r / 100.0;
      double phi = 2.0 * M_PI * a / 720.0;
      Vector y{rad * std::cos(phi), rad * std::sin(phi)};
      CHECK(surrogate(y) >= best - 1e-6);
    }
  }
}

TEST_CASE("surrogate minimizers satisfy first-order optimality") {
  Rng rng(606);
  L2Ball ball(Vector(4, 0.1), 1.2);
  Box box(Vector(4, -1.0), Vector(4, 1.0));
  for (const FeasibleSet* set :
       {static_cast<const FeasibleSet*>(&ball),
        static_cast<const FeasibleSet*>(&box)}) {
    for (int rep = 0; rep < 50; ++rep) {
      Vector gbar(4), ysum(4, 0.0);
      for (double& g : gbar) g = rng.uniform(-4.0, 4.0);
      Vector y1 = set->sample(rng);
      double eta = rng.uniform(0.05, 1.5);

      Vector ystar = oracle::exact_surrogate_min_convex(*set, gbar, y1, eta);
      Vector grad = combine(eta, gbar, 2.0, ystar, -2.0, y1);
      for (int i = 0; i < 100; ++i) {
        Vector x = set->sample(rng);
        CHECK(dot(grad, subtract(x, ystar)) >= -1e-6);
      }

      long tau = 1 + static_cast<long>(rng.uniform_int(0, 4));
      for (long k = 0; k < tau; ++k) add_scaled(ysum, 1.0, set->sample(rng));
      double beta = rng.uniform(0.2, 3.0);
      Vector ystar_sc =
          oracle::exact_surrogate_min_sc(*set, gbar, ysum, tau, beta);
      Vector grad_sc =
          combine(1.0, gbar, beta * static_cast<double>(tau), ystar_sc, -beta,
                  ysum);
      for (int i = 0; i < 100; ++i) {
        Vector x = set->sample(rng);
        CHECK(dot(grad_sc, subtract(x, ystar_sc)) >= -1e-6);
      }
    }
  }
}

TEST_CASE("reference trajectory basics") {
  Box box(Vector{-1.0, -1.0}, Vector{1.0, 1.0});
  Vector y1{0.0, 0.0};

  auto empty = oracle::reference_ofw_convex(box, {}, y1, 0.5);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == y1);

  // one gradient: identical to one solver ingest
  Vector g{1.0, -2.0};
  auto traj = oracle::reference_ofw_convex(box, {g}, y1, 0.5);
  ConvexOfw solver(y1, 0.5);
  solver.ingest(g, box);
  REQUIRE(traj.size() == 2);
  for (int i = 0; i < 2; ++i)
    CHECK(traj[1][i] == doctest::Approx(solver.play()[i]).epsilon(1e-15));
}

TEST_CASE("offline comparator closed forms") {
  L2Ball ball(Vector{0.0, 0.0}, 1.0);

  // aligned linear losses: x* = (-1, 0), total = -T
  const long T = 50;
  std::vector<Vector> grads(T, Vector{1.0, 0.0});
  LinearStream aligned(std::move(grads), 1.0);
  auto linear_result = oracle::offline_comparator(ball, aligned);
  CHECK(linear_result.method ==
        oracle::ComparatorResult::Method::closed_form_linear);
  CHECK(linear_result.x_star[0] == doctest::Approx(-1.0));
  CHECK(linear_result.x_star[1] == doctest::Approx(0.0));
  CHECK(linear_result.offline_total ==
        doctest::Approx(-static_cast<double>(T)).epsilon(1e-12));
  CHECK(linear_result.certified_gap == 0.0);

  // constant interior target: x* = theta, total = 0
  Vector theta{0.25, -0.25};
  std::vector<Vector> targets(30, theta);
  QuadraticStream constant(std::move(targets), 2.0, ball.diameter());
  auto quad_result = oracle::offline_comparator(ball, constant);
  CHECK(quad_result.method ==
        oracle::ComparatorResult::Method::closed_form_quadratic);
  CHECK(distance(quad_result.x_star, theta) <= 1e-12);
  CHECK(quad_result.offline_total == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("offline Frank-Wolfe certifies agreement with the closed forms") {
  Rng rng(11);
  L2Ball ball(Vector(6, 0.0), 1.0);
  Box box(Vector(6, -1.0), Vector(6, 1.0));
  const long T = 64;

  for (const FeasibleSet* set :
       {static_cast<const FeasibleSet*>(&ball),
        static_cast<const FeasibleSet*>(&box)}) {
    QuadraticStream quad(*set, T, 1.0, 500 + rng.uniform_int(0, 10));
    auto closed = oracle::offline_comparator(*set, quad);
    auto fw = oracle::offline_comparator_fw(*set, quad);
    CHECK(fw.converged);
    CHECK(fw.certified_gap <= 1e-8);
    CHECK(std::abs(fw.offline_total - closed.offline_total) <= 1e-6);

    LinearStream lin(T, 6, 1.0, 600 + rng.uniform_int(0, 10));
    auto closed_lin = oracle::offline_comparator(*set, lin);
    auto fw_lin = oracle::offline_comparator_fw(*set, lin);
    CHECK(fw_lin.converged);
    CHECK(fw_lin.certified_gap <= 1e-8);
    CHECK(std::abs(fw_lin.offline_total - closed_lin.offline_total) <= 1e-6);
  }
}

TEST_CASE("grid line search oracle") {
  CHECK(oracle::grid_line_search({1.0, 1.0}, {0.0, 0.0}, 1.0) == 0.0);
  // monotone increasing objective
  CHECK(oracle::grid_line_search({1.0, 0.0}, {1.0, 0.0}, 1.0) == 0.0);
  // vertex at 0.5
  CHECK(oracle::grid_line_search({1.0, 0.0}, {-1.0, 0.0}, 1.0) ==
        doctest::Approx(0.5).epsilon(2e-4));
}
