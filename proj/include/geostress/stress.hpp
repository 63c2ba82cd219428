#pragma once

#include "geostress/core.hpp"
#include "geostress/graph.hpp"

#include <Eigen/Core>

namespace geostress {

enum class StressKernel {
  /// Σ ω_ij (‖x_i − x_j‖² − d_ij²)²
  SquaredDifferences,
  /// Σ ω_ij (‖x_i − x_j‖ − d_ij)²
  RawDifferences,
};

/// Weighted stress, summed over all ordered pairs (i,j), i.e. twice the i<j
/// sum. Pairs with zero weight are skipped.
double stress(const PointCloud& x, const DistanceMatrix& d, const WeightMatrix& w,
              StressKernel kernel = StressKernel::SquaredDifferences);

/// Analytic gradient of stress() with respect to the coordinates (n×k).
/// For RawDifferences, pairs closer than 1e-12 contribute the subgradient 0.
Eigen::MatrixXd stress_gradient(const PointCloud& x, const DistanceMatrix& d,
                                const WeightMatrix& w,
                                StressKernel kernel = StressKernel::SquaredDifferences);

/// Cost and gradient together, on the row-major flattened coordinates.
/// `grad` is resized to n·k.
double stress_and_gradient(const Eigen::VectorXd& flat, std::size_t k, const DistanceMatrix& d,
                           const WeightMatrix& w, StressKernel kernel, Eigen::VectorXd& grad);

/// max over (i,j) ∈ E of |‖x_i − x_j‖ − d_ij|; 0 for an empty edge set.
double dgp_residual(const PointCloud& x, const DistanceMatrix& d, const DistanceGraph& g);

/// Largest violation of the per-pair bound implied by a single term not
/// exceeding the total cost. For the squared kernel the bound is
/// ‖x_i−x_j‖² ≤ d_ij² + sqrt(cost/ω_ij); for the raw kernel it is
/// ‖x_i−x_j‖ ≤ d_ij + sqrt(cost/ω_ij). Returns max(lhs − rhs) over
/// positive-weight pairs; nonpositive means the bound holds.
double edge_bound_excess(const PointCloud& x, const DistanceMatrix& d, const WeightMatrix& w,
                         double cost, StressKernel kernel = StressKernel::SquaredDifferences);

}  // namespace geostress
