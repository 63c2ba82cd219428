#pragma once

#include <Eigen/Core>

#include <cstddef>

namespace geostress {

/// n×k matrix of coordinates, row i is the image x_i of object i.
class PointCloud {
public:
  PointCloud() = default;
  /// Throws DomainError on non-finite entries.
  explicit PointCloud(Eigen::MatrixXd coords);
  PointCloud(std::size_t n, std::size_t k);  // all zeros

  std::size_t n() const noexcept { return static_cast<std::size_t>(x_.rows()); }
  std::size_t k() const noexcept { return static_cast<std::size_t>(x_.cols()); }

  double operator()(std::size_t i, std::size_t c) const { return x_(i, c); }
  auto row(std::size_t i) const { return x_.row(static_cast<Eigen::Index>(i)); }
  const Eigen::MatrixXd& matrix() const noexcept { return x_; }

  /// Largest pairwise Euclidean distance (0 for n < 2).
  double diameter() const;

  /// Row-major flattening used by the optimizers: x_i occupies [i*k, i*k+k).
  Eigen::VectorXd flatten() const;
  static PointCloud unflatten(const Eigen::VectorXd& v, std::size_t n, std::size_t k);

  friend bool operator==(const PointCloud& a, const PointCloud& b) {
    return a.x_.rows() == b.x_.rows() && a.x_.cols() == b.x_.cols() && a.x_ == b.x_;
  }

private:
  Eigen::MatrixXd x_;
};

/// Symmetric, nonnegative dissimilarities with a zero diagonal.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  /// Validates the invariants. Differences below 1e-12 (relative) between
  /// d_ij and d_ji, and diagonal entries below 1e-12, are absorbed; the stored
  /// matrix is then exactly symmetric with an exactly zero diagonal.
  explicit DistanceMatrix(Eigen::MatrixXd d);

  /// Euclidean distances between the rows of a point cloud.
  static DistanceMatrix from_points(const PointCloud& x);

  std::size_t size() const noexcept { return static_cast<std::size_t>(d_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return d_(i, j); }
  const Eigen::MatrixXd& matrix() const noexcept { return d_; }
  double max_distance() const;

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.d_.rows() == b.d_.rows() && a.d_ == b.d_;
  }

private:
  Eigen::MatrixXd d_;
};

/// Symmetric nonnegative pair weights with a zero diagonal.
///
/// Weights produced by build_weight_matrix() lie in [0,1]. Scaled copies
/// (see scaled()) may exceed 1; the stress functional is defined for any
/// nonnegative weights.
class WeightMatrix {
public:
  WeightMatrix() = default;
  explicit WeightMatrix(Eigen::MatrixXd w, bool clamped = false);

  static WeightMatrix ones(std::size_t n);
  static WeightMatrix zeros(std::size_t n);

  std::size_t size() const noexcept { return static_cast<std::size_t>(w_.rows()); }
  double operator()(std::size_t i, std::size_t j) const { return w_(i, j); }
  const Eigen::MatrixXd& matrix() const noexcept { return w_; }

  /// True if at least one entry was clamped to [0,1] when built from a family.
  bool clamped() const noexcept { return clamped_; }

  /// c·W for c >= 0.
  WeightMatrix scaled(double c) const;

  bool is_zero() const;

private:
  Eigen::MatrixXd w_;
  bool clamped_ = false;
};

/// Subtract the column means so that the rows sum to zero.
PointCloud center(const PointCloud& x);

/// |Σ_i x_i| <= 1e-12 · n · max(diameter, 1) on every coordinate.
bool is_centered(const PointCloud& x);

}  // namespace geostress
