#include "geostress/compare.hpp"
#include "geostress/error.hpp"
#include "geostress/experiments.hpp"
#include "geostress/isomap.hpp"
#include "geostress/optimize.hpp"
#include "geostress/weights.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <cmath>

using namespace geostress;

namespace {

Objective quadratic(const Eigen::VectorXd& c, const Eigen::VectorXd& scales) {
  return [c, scales](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    const Eigen::VectorXd r = x - c;
    g = 2.0 * scales.cwiseProduct(r);
    return r.dot(scales.cwiseProduct(r));
  };
}

Objective double_well() {
  return [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    const double t = x(0) * x(0) - 1.0;
    g.resize(1);
    g(0) = 4.0 * x(0) * t;
    return t * t;
  };
}

bool monotone(const std::vector<TracePoint>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i)
    if (trace[i].cost > trace[i - 1].cost) return false;
  return true;
}

}  // namespace

TEST_SUITE("local minimize") {
  TEST_CASE("convex quadratic converges to its center") {
    Rng rng(1);
    for (int t = 0; t < 5; ++t) {
      Eigen::VectorXd c(6), s(6), x0(6);
      for (int i = 0; i < 6; ++i) {
        c(i) = rng.uniform(-3, 3);
        s(i) = rng.uniform(0.5, 20);
        x0(i) = rng.uniform(-10, 10);
      }
      const auto r = local_minimize(quadratic(c, s), x0, OptimConfig{});
      CHECK(r.converged);
      CHECK((r.x - c).cwiseAbs().maxCoeff() <= 1e-8);
      CHECK(monotone(r.trace));
    }
  }

  TEST_CASE("starting at a realization takes no steps") {
    Rng rng(2);
    const auto x = testing::random_cloud(rng, 5, 2);
    const auto d = DistanceMatrix::from_points(x);
    const auto w = WeightMatrix::ones(5);
    const auto r = local_minimize(stress_objective(d, w, 2, StressKernel::SquaredDifferences),
                                  x.flatten(), OptimConfig{});
    CHECK(r.converged);
    CHECK(r.n_iters == 0);
    CHECK(r.x == x.flatten());
  }

  TEST_CASE("two-point problem in one dimension") {
    Eigen::Matrix2d m;
    m << 0, 1, 1, 0;
    const DistanceMatrix d(m);
    const auto w = WeightMatrix::ones(2);
    const Eigen::Vector2d x0(0.0, 0.2);
    const auto r = local_minimize(stress_objective(d, w, 1, StressKernel::SquaredDifferences), x0,
                                  OptimConfig{});
    CHECK(r.converged);
    CHECK(std::abs(std::abs(r.x(1) - r.x(0)) - 1.0) <= 1e-9);
    CHECK(r.cost <= 1e-16);
  }

  TEST_CASE("non-finite start is an error carrying the iterate") {
    const Objective f = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
      g = x;
      return std::log(x(0) - 5.0);
    };
    try {
      local_minimize(f, Eigen::VectorXd::Zero(1), OptimConfig{});
      FAIL("expected NonFiniteError");
    } catch (const NonFiniteError& e) {
      CHECK(e.last_good().size() == 1);
    }
  }

  TEST_CASE("backtracks out of a non-finite region") {
    // f = -log(1 - x²) has domain (-1, 1); a unit step overshoots it.
    const Objective f = [](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
      g.resize(1);
      const double u = 1.0 - x(0) * x(0);
      g(0) = 2.0 * x(0) / u;
      return u > 0.0 ? -std::log(u) : std::nan("");
    };
    const auto r = local_minimize(f, Eigen::VectorXd::Constant(1, 0.9), OptimConfig{});
    CHECK(r.converged);
    CHECK(std::abs(r.x(0)) < 1e-8);
  }

  TEST_CASE("config validation") {
    OptimConfig cfg;
    cfg.grad_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.bh_hops = -1;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.line_search.wolfe_c2 = 1e-5;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
  }

  TEST_CASE("stress traces are non-increasing") {
    Rng rng(3);
    for (int t = 0; t < 10; ++t) {
      const auto d = testing::random_dissimilarity(rng, 8);
      const auto w = testing::random_weights(rng, 8);
      const auto x0 = testing::random_cloud(rng, 8, 2);
      for (auto kernel : {StressKernel::SquaredDifferences, StressKernel::RawDifferences}) {
        const auto r = local_minimize(stress_objective(d, w, 2, kernel), x0.flatten(), OptimConfig{});
        CHECK(monotone(r.trace));
        CHECK(r.cost <= stress(x0, d, w, kernel));
      }
    }
  }

  TEST_CASE("minimizers are invariant under scaling the weights") {
    Rng rng(4);
    const auto d = testing::random_dissimilarity(rng, 7, 0.5, 1.5);  // not Euclidean
    const auto w = testing::random_weights(rng, 7);
    const auto x0 = testing::random_cloud(rng, 7, 2);
    const auto obj = [&](const WeightMatrix& ww) {
      return stress_objective(d, ww, 2, StressKernel::SquaredDifferences);
    };
    const auto base = local_minimize(obj(w), x0.flatten(), OptimConfig{});
    REQUIRE(base.cost > 1e-3);
    for (double c : {0.5, 3.0, 10.0}) {
      const auto wc = w.scaled(c);
      const auto scaled = local_minimize(obj(wc), x0.flatten(), OptimConfig{});
      const double under_w = stress(PointCloud::unflatten(scaled.x, 7, 2), d, w);
      CHECK(under_w == doctest::Approx(base.cost).epsilon(1e-6));
      CHECK(scaled.cost == doctest::Approx(c * base.cost).epsilon(1e-6));
    }
  }
}

TEST_SUITE("basin hopping") {
  TEST_CASE("zero hops equals a single local minimization") {
    Rng rng(5);
    const auto d = testing::random_dissimilarity(rng, 6);
    const auto w = testing::random_weights(rng, 6);
    const auto f = stress_objective(d, w, 2, StressKernel::SquaredDifferences);
    const Eigen::VectorXd x0 = testing::random_cloud(rng, 6, 2).flatten();
    OptimConfig cfg;
    cfg.bh_hops = 0;
    const auto bh = basin_hopping(f, x0, cfg);
    const auto lm = local_minimize(f, x0, cfg);
    CHECK(bh.x == lm.x);
    CHECK(bh.cost == lm.cost);
  }

  TEST_CASE("double well reaches a global minimum") {
    OptimConfig cfg;
    cfg.bh_hops = 20;
    cfg.bh_step = 1.0;
    cfg.seed = 3;
    const auto r = basin_hopping(double_well(), Eigen::VectorXd::Constant(1, -0.9), cfg);
    CHECK(r.cost <= 1e-16);
    CHECK(std::abs(std::abs(r.x(0)) - 1.0) <= 1e-8);
    CHECK(monotone(r.trace));
  }

  TEST_CASE("fixed seed gives identical runs; different seeds explore differently") {
    Rng rng(6);
    const auto d = testing::random_dissimilarity(rng, 8);
    const auto w = testing::random_weights(rng, 8);
    const auto f = stress_objective(d, w, 2, StressKernel::SquaredDifferences);
    const Eigen::VectorXd x0 = testing::random_cloud(rng, 8, 2).flatten();
    OptimConfig cfg;
    cfg.bh_hops = 15;
    cfg.bh_step = 0.3;
    cfg.seed = 99;
    const auto a = basin_hopping(f, x0, cfg);
    const auto b = basin_hopping(f, x0, cfg);
    CHECK(a.x == b.x);
    CHECK(a.trace == b.trace);
    CHECK(a.n_iters == b.n_iters);
  }

  TEST_CASE("never worse than its first local minimization") {
    Rng rng(7);
    const auto d = testing::random_dissimilarity(rng, 9);
    const auto w = testing::random_weights(rng, 9);
    const auto f = stress_objective(d, w, 2, StressKernel::SquaredDifferences);
    const Eigen::VectorXd x0 = testing::random_cloud(rng, 9, 2).flatten();
    OptimConfig cfg;
    cfg.bh_hops = 10;
    CHECK(basin_hopping(f, x0, cfg).cost <= local_minimize(f, x0, cfg).cost);
  }
}

TEST_SUITE("solve_nlm") {
  TEST_CASE("least-square scaling on Euclidean data from MDS is already optimal") {
    Rng rng(8);
    const auto x = testing::random_cloud(rng, 10, 2);
    const auto d = DistanceMatrix::from_points(x);
    for (auto kernel : {StressKernel::SquaredDifferences, StressKernel::RawDifferences}) {
      const auto r = solve_nlm(d, WeightMatrix::ones(10), 2, kernel, init::ClassicalMds{},
                               Method::Bfgs, OptimConfig{});
      CHECK(r.cost <= 1e-10);
      CHECK(congruence_distance(r.x, x) <= 1e-6);
    }
  }

  TEST_CASE("rigid three-point instance is realized from any start") {
    const auto d = rigidity_distances();
    const auto w = rigidity_weights(1.0);
    const auto g = graph_from_weights(w, d);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto r = solve_nlm(d, w, 2, StressKernel::SquaredDifferences, init::Random{seed},
                               Method::Bfgs, OptimConfig{});
      CHECK(dgp_residual(r.x, d, g) <= 1e-6);
    }
  }

  TEST_CASE("result contract: centered, cost recomputed, no worse than the start") {
    Rng rng(9);
    const auto d = testing::random_dissimilarity(rng, 10);
    const auto w = testing::random_weights(rng, 10);
    for (Method m : {Method::Bfgs, Method::BasinHopping}) {
      OptimConfig cfg;
      cfg.bh_hops = 5;
      const auto r = solve_nlm(d, w, 2, StressKernel::SquaredDifferences, init::Random{4}, m, cfg);
      CHECK(is_centered(r.x));
      CHECK(r.cost == doctest::Approx(stress(r.x, d, w)).epsilon(1e-12));
      CHECK(r.cost <= r.init_cost);
      CHECK(r.weight_graph_connected);
      CHECK(edge_bound_excess(r.x, d, w, r.cost) <= 1e-9);
    }
  }

  TEST_CASE("disconnected weight graph is flagged, not fatal") {
    Rng rng(10);
    const auto x = testing::random_cloud(rng, 4, 2);
    const auto d = DistanceMatrix::from_points(x);
    Eigen::Matrix4d wm = Eigen::Matrix4d::Zero();
    wm(0, 1) = wm(1, 0) = 1.0;
    wm(2, 3) = wm(3, 2) = 1.0;
    const auto r = solve_nlm(d, WeightMatrix(wm), 2, StressKernel::SquaredDifferences,
                             init::Random{1}, Method::Bfgs, OptimConfig{});
    CHECK_FALSE(r.weight_graph_connected);
  }

  TEST_CASE("initializer failures are distinct from optimizer failures") {
    Eigen::MatrixXd x(3, 1);
    x << 0.0, 1.0, 5.0;
    const auto d = DistanceMatrix::from_points(PointCloud(x));
    try {
      solve_nlm(d, WeightMatrix::ones(3), 1, StressKernel::SquaredDifferences, init::Isomap{1.5},
                Method::Bfgs, OptimConfig{});
      FAIL("expected InitializerError");
    } catch (const InitializerError& e) {
      REQUIRE(e.unreachable().has_value());
      CHECK(e.unreachable()->second == 2);
    }
    CHECK_THROWS_AS(solve_nlm(d, WeightMatrix::ones(3), 3, StressKernel::SquaredDifferences,
                              init::ClassicalMds{}, Method::Bfgs, OptimConfig{}),
                    InitializerError);
  }

  TEST_CASE("given init is used verbatim") {
    Rng rng(11);
    const auto x0 = testing::random_cloud(rng, 5, 2);
    const auto d = testing::random_dissimilarity(rng, 5);
    const auto r = solve_nlm(d, WeightMatrix::ones(5), 2, StressKernel::SquaredDifferences,
                             init::Given{x0}, Method::Bfgs, OptimConfig{});
    CHECK(r.initial == x0);
    CHECK_THROWS_AS(solve_nlm(d, WeightMatrix::ones(5), 3, StressKernel::SquaredDifferences,
                              init::Given{x0}, Method::Bfgs, OptimConfig{}),
                    InitializerError);
  }

  TEST_CASE("ring pipeline improves on the Isomap start") {
    const auto d = DistanceMatrix::from_points(gen_ring(100, 0.8, 1.0, 42));
    const auto w = build_weight_matrix(d, weight::TanhSigmoid{10.0, 0.5});
    const auto iso = isomap_embed(d, 0.5, 2);
    const auto r = solve_nlm(d, w, 2, StressKernel::SquaredDifferences, init::Isomap{0.5},
                             Method::Bfgs, OptimConfig{});
    CHECK(stress(iso.x, d, w) > r.cost);
    CHECK(r.cost < 10.0);
  }
}

TEST_SUITE("multi start") {
  TEST_CASE("single start is a singleton") {
    const auto runs = multi_start_solutions(rigidity_distances(), rigidity_weights(1.0), 2, 1,
                                            OptimConfig{});
    CHECK(runs.size() == 1);
  }

  TEST_CASE("rigid instance yields one congruence class") {
    const auto runs = multi_start_solutions(rigidity_distances(), rigidity_weights(1.0), 2, 20,
                                            OptimConfig{});
    const auto sample = solution_sample(runs, 1e-12);
    REQUIRE(sample.size() >= 2);
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i + 1; j < sample.size(); ++j)
        CHECK(congruence_distance(sample[i].x, sample[j].x) <= 1e-4);
  }

  TEST_CASE("flexible instance yields incongruent solutions at the same cost") {
    const auto runs = multi_start_solutions(rigidity_distances(), rigidity_weights(0.0), 2, 50,
                                            OptimConfig{});
    const auto sample = solution_sample(runs, 1e-12);
    double widest = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i)
      for (std::size_t j = i + 1; j < sample.size(); ++j)
        widest = std::max(widest, congruence_distance(sample[i].x, sample[j].x));
    CHECK(widest >= 0.1);
  }

  TEST_CASE("sorted by cost and identical across thread counts") {
    Rng rng(12);
    const auto d = testing::random_dissimilarity(rng, 6);
    const auto w = testing::random_weights(rng, 6);
    const auto serial = multi_start_solutions(d, w, 2, 8, OptimConfig{}, StressKernel::SquaredDifferences, 1);
    const auto threaded = multi_start_solutions(d, w, 2, 8, OptimConfig{}, StressKernel::SquaredDifferences, 4);
    for (std::size_t i = 1; i < serial.size(); ++i) CHECK(serial[i - 1].cost <= serial[i].cost);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].x == threaded[i].x);
      CHECK(is_centered(serial[i].x));
    }
  }

  TEST_CASE("n_starts = 0 is rejected") {
    CHECK_THROWS_AS(multi_start_solutions(rigidity_distances(), rigidity_weights(1.0), 2, 0, OptimConfig{}),
                    DomainError);
  }
}
