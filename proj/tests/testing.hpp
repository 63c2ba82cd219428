#pragma once

// Shared generators and independent oracles for the test suites.

#include "geostress/core.hpp"
#include "geostress/random.hpp"
#include "geostress/stress.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geostress::testing {

inline PointCloud random_cloud(Rng& rng, std::size_t n, std::size_t k, double half_width = 1.0) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index c = 0; c < x.cols(); ++c) x(i, c) = rng.uniform(-half_width, half_width);
  return PointCloud(std::move(x));
}

/// Symmetric, zero diagonal, entries uniform in [lo, hi]. Generally not a metric.
inline DistanceMatrix random_dissimilarity(Rng& rng, std::size_t n, double lo = 0.1, double hi = 2.0) {
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = i + 1; j < nn; ++j) d(i, j) = d(j, i) = rng.uniform(lo, hi);
  return DistanceMatrix(std::move(d));
}

inline WeightMatrix random_weights(Rng& rng, std::size_t n, double zero_fraction = 0.0) {
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(nn, nn);
  for (Eigen::Index i = 0; i < nn; ++i)
    for (Eigen::Index j = i + 1; j < nn; ++j)
      w(i, j) = w(j, i) = rng.uniform() < zero_fraction ? 0.0 : rng.uniform();
  return WeightMatrix(std::move(w));
}

/// Random rotation (and optional reflection) in R^k via Gram–Schmidt.
inline Eigen::MatrixXd random_orthogonal(Rng& rng, std::size_t k, bool reflect) {
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd q(kk, kk);
  for (Eigen::Index i = 0; i < kk; ++i)
    for (Eigen::Index j = 0; j < kk; ++j) q(i, j) = rng.uniform(-1.0, 1.0);
  for (Eigen::Index c = 0; c < kk; ++c) {
    for (Eigen::Index p = 0; p < c; ++p) q.col(c) -= q.col(c).dot(q.col(p)) * q.col(p);
    q.col(c).normalize();
  }
  if (reflect) q.col(0) = -q.col(0);
  return q;
}

inline PointCloud apply_isometry(const PointCloud& x, const Eigen::MatrixXd& rot,
                                 const Eigen::RowVectorXd& shift) {
  return PointCloud((x.matrix() * rot).rowwise() + shift);
}

/// Naive ordered double sum straight from the definition.
inline double naive_stress(const PointCloud& x, const DistanceMatrix& d, const WeightMatrix& w,
                           StressKernel kernel) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.n(); ++i)
    for (std::size_t j = 0; j < x.n(); ++j) {
      const double r = (x.row(i) - x.row(j)).norm();
      const double res = kernel == StressKernel::SquaredDifferences ? r * r - d(i, j) * d(i, j)
                                                                    : r - d(i, j);
      s += w(i, j) * res * res;
    }
  return s;
}

/// Central finite differences of naive_stress with step h.
inline Eigen::MatrixXd fd_gradient(const PointCloud& x, const DistanceMatrix& d,
                                   const WeightMatrix& w, StressKernel kernel, double h) {
  Eigen::MatrixXd g(x.matrix().rows(), x.matrix().cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      Eigen::MatrixXd plus = x.matrix(), minus = x.matrix();
      plus(i, c) += h;
      minus(i, c) -= h;
      g(i, c) = (naive_stress(PointCloud(plus), d, w, kernel) -
                 naive_stress(PointCloud(minus), d, w, kernel)) /
                (2.0 * h);
    }
  return g;
}

/// ‖analytic − numeric‖∞ / max(‖numeric‖∞, floor).
inline double gradient_relative_error(const Eigen::MatrixXd& analytic, const Eigen::MatrixXd& numeric,
                                      double floor = 1e-8) {
  const double scale = std::max(numeric.cwiseAbs().maxCoeff(), floor);
  return (analytic - numeric).cwiseAbs().maxCoeff() / scale;
}

}  // namespace geostress::testing
