#pragma once

#include "geostress/core.hpp"
#include "geostress/optimize.hpp"
#include "geostress/stress.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geostress {

// ---------------------------------------------------------------------------
// Ring dataset
// ---------------------------------------------------------------------------

enum class RingSampling {
  /// Uniform with respect to area: r = sqrt(U·(r_out² − r_in²) + r_in²).
  UniformArea,
  /// Uniform radius in [r_in, r_out].
  UniformRadius,
};

/// n points in the annulus r_in <= ‖p‖ <= r_out, angle uniform in [0, 2π).
PointCloud gen_ring(std::size_t n, double r_in = 0.8, double r_out = 1.0, std::uint64_t seed = 0,
                    RingSampling sampling = RingSampling::UniformArea);

// ---------------------------------------------------------------------------
// Continuity sweep over the tanh weight family
// ---------------------------------------------------------------------------

struct SweepRow {
  double theta = 0.0;
  double a = 0.0;
  Method method = Method::Bfgs;
  double init_cost = 0.0;
  double final_cost = 0.0;
  int n_iters = 0;
  bool converged = false;
  double wall_time = 0.0;  // seconds
  bool failed = false;
  std::string diagnosis;  // empty unless failed
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::uint64_t dataset_seed = 0;
};

/// For each (θ, a, method) in grid order: W from TanhSigmoid(a, θ), Isomap
/// initialization on {d <= θ}, then solve_nlm. Cells whose threshold graph is
/// disconnected, or whose optimizer fails, are recorded as failed rows.
SweepReport continuity_sweep(const DistanceMatrix& d, const std::vector<double>& thetas,
                             const std::vector<double>& stiffnesses,
                             const std::vector<Method>& methods, std::size_t k,
                             const OptimConfig& cfg,
                             StressKernel kernel = StressKernel::SquaredDifferences,
                             std::size_t jobs = 1, std::uint64_t dataset_seed = 0);

// ---------------------------------------------------------------------------
// Rigidity counterexample: three points, one weight driven to zero
// ---------------------------------------------------------------------------

/// Distances of the right isoceles triangle with unit legs at vertex 0.
DistanceMatrix rigidity_distances();
/// Weights 1 on the legs and eta on the hypotenuse; zero diagonal.
WeightMatrix rigidity_weights(double eta);
/// The collinear configuration [[0,0],[1,0],[-1,0]], feasible only at eta = 0.
PointCloud collinear_configuration();
/// The realization [[0,0],[0,1],[1,0]].
PointCloud triangle_configuration();

struct RigidityRow {
  double eta = 0.0;
  std::size_t starts = 0;
  std::size_t sample_size = 0;     // near-optimal members
  std::size_t classes = 0;         // congruence classes among them
  double best_cost = 0.0;
  double max_pairwise = 0.0;       // largest congruence distance inside the sample
  double distance_to_flexible = 0.0;  // solution_set_distance to the eta = 0 sample
  std::vector<PointCloud> sample;
};

struct RigidityReport {
  std::vector<RigidityRow> rows;
  /// Stress of collinear_configuration() under eta = 0 weights.
  double collinear_stress = 0.0;
  /// Congruence distance between the collinear and triangle configurations.
  double collinear_to_triangle = 0.0;
};

/// multi_start_solutions (k = 2) for each eta and for eta = 0. The sample is
/// filtered with solution_sample(·, cfg.f_tol); classes use `class_tol`.
RigidityReport rigidity_demo(const std::vector<double>& etas, std::size_t n_starts,
                             const OptimConfig& cfg, double class_tol = 1e-4,
                             std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Scaling of the weights towards zero
// ---------------------------------------------------------------------------

struct ZeroWeightRow {
  double eta;
  double scaled_stress;
  double ratio;  // scaled_stress / base_stress, NaN when base is exactly zero
};

struct ZeroWeightReport {
  double base_stress = 0.0;
  bool exact_zero = false;
  std::vector<ZeroWeightRow> rows;
};

ZeroWeightReport zero_weight_demo(const DistanceMatrix& d, const WeightMatrix& w,
                                  const PointCloud& x, const std::vector<double>& etas,
                                  StressKernel kernel = StressKernel::SquaredDifferences);

// ---------------------------------------------------------------------------
// Uniform convergence of tanh weights to the step function
// ---------------------------------------------------------------------------

struct HeavisideRow {
  double a = 0.0;
  /// sup over grid points with |d − θ| >= exclusion of |ω_{a,θ}(d) − H(θ − d)|.
  double sup_deviation = 0.0;
  double worst_d = 0.0;
  /// (1 − tanh(a·e)) / 2 with e the smallest admissible |d − θ| on the grid.
  double closed_form = 0.0;
  /// |ω − H| at d = θ, which is 1/2 for every a.
  double at_threshold = 0.5;
};

struct HeavisideReport {
  double theta = 0.0;
  double exclusion = 0.0;
  std::vector<HeavisideRow> rows;
  bool monotone = true;  // sup_deviation non-increasing along a_list
};

/// Throws DomainError for nonpositive exclusion or grid points outside (0, ∞).
HeavisideReport heaviside_convergence(double theta, const std::vector<double>& a_list,
                                      const std::vector<double>& d_grid, double exclusion);

/// lo, lo + step, ... up to hi (inclusive within rounding), computed as
/// lo + i·step.
std::vector<double> uniform_grid(double lo, double hi, double step);

}  // namespace geostress
