#pragma once

#include "geostress/core.hpp"
#include "geostress/stress.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace geostress {

/// f(x), writing ∇f(x) into grad (resized by the callee).
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd& grad)>;

struct LineSearchConfig {
  double armijo_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  /// Upper bound on objective evaluations per line search.
  int max_backtracks = 50;
};

struct OptimConfig {
  int max_iters = 2000;
  /// Stop when the gradient max-norm falls to this value.
  double grad_tol = 1e-8;
  /// Stop when an iteration decreases f by at most f_tol·max(|f_old|, |f_new|).
  double f_tol = 1e-12;
  LineSearchConfig line_search;
  int bh_hops = 100;
  /// Half-width of the uniform basin-hopping perturbation. When unset,
  /// solve_nlm uses 0.5 · max d_ij / sqrt(n) and basin_hopping() uses 0.5.
  std::optional<double> bh_step;
  double bh_temperature = 1.0;
  std::uint64_t seed = 0;

  /// Throws DomainError on nonpositive tolerances or negative hop counts.
  void validate() const;
};

struct TracePoint {
  int iteration;
  double cost;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

/// Outcome of minimizing a generic objective.
struct MinimizeResult {
  Eigen::VectorXd x;
  double cost = 0.0;
  int n_iters = 0;
  /// True only when a tolerance test (gradient or decrease) ended the run.
  bool converged = false;
  std::vector<TracePoint> trace;
  std::string stop_reason;
};

/// Dense BFGS with a strong-Wolfe line search. The cost trace is
/// non-increasing. Throws NonFiniteError if f is not finite at x0 or if a
/// line search cannot find any finite trial point.
MinimizeResult local_minimize(const Objective& f, const Eigen::VectorXd& x0, const OptimConfig& cfg);

/// Basin hopping: local_minimize(x0), then cfg.bh_hops rounds of uniform
/// perturbation of the current point, local minimization and Metropolis
/// acceptance at cfg.bh_temperature. Returns the lowest minimum seen; the
/// trace records the best cost after each hop and n_iters sums all local
/// iterations. Deterministic for a fixed cfg.seed.
MinimizeResult basin_hopping(const Objective& f, const Eigen::VectorXd& x0, const OptimConfig& cfg);

namespace init {
/// Isomap on the threshold graph {d_ij <= theta}.
struct Isomap {
  double theta;
};
struct ClassicalMds {};
/// Uniform coordinates in [-r, r], r = max d_ij / 2.
struct Random {
  std::uint64_t seed;
};
struct Given {
  PointCloud x;
};
}  // namespace init

using InitSpec = std::variant<init::Isomap, init::ClassicalMds, init::Random, init::Given>;

enum class Method { Bfgs, BasinHopping };

/// Solution of the weighted stress problem at a fixed weight matrix.
struct OptimResult {
  /// Centered minimizer; cost is stress(x) recomputed after centering.
  PointCloud x;
  double cost = 0.0;
  int n_iters = 0;
  bool converged = false;
  std::vector<TracePoint> trace;
  std::string stop_reason;

  PointCloud initial;
  double init_cost = 0.0;
  /// Whether the positive-weight graph is connected. When false the
  /// minimizer set is unbounded and x is one arbitrary representative.
  bool weight_graph_connected = true;
};

/// Stress of a flattened n·k configuration as an Objective.
Objective stress_objective(const DistanceMatrix& d, const WeightMatrix& w, std::size_t k,
                           StressKernel kernel);

/// Starting configuration for solve_nlm. Wraps failures in InitializerError.
PointCloud initial_point(const DistanceMatrix& d, std::size_t k, const InitSpec& init);

/// Initializer followed by BFGS or basin hopping on the weighted stress.
/// `eps` is the weight above which a pair counts as an edge for the
/// connectivity check.
OptimResult solve_nlm(const DistanceMatrix& d, const WeightMatrix& w, std::size_t k,
                      StressKernel kernel, const InitSpec& init, Method method,
                      const OptimConfig& cfg, double eps = 0.0);

/// n_starts seeded random starts, each minimized by BFGS, sorted by
/// (cost, start index). Starts run on up to `jobs` threads.
std::vector<OptimResult> multi_start_solutions(const DistanceMatrix& d, const WeightMatrix& w,
                                               std::size_t k, std::size_t n_starts,
                                               const OptimConfig& cfg,
                                               StressKernel kernel = StressKernel::SquaredDifferences,
                                               std::size_t jobs = 1);

/// Leading members of a cost-sorted list whose cost is within
/// tol·(1 + |best|) of the best. tol defaults to cfg.f_tol.
std::vector<OptimResult> solution_sample(const std::vector<OptimResult>& sorted, double tol);

}  // namespace geostress
