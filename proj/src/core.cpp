#include "geostress/core.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace geostress {

namespace {

std::string pair_name(Eigen::Index i, Eigen::Index j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

PointCloud::PointCloud(Eigen::MatrixXd coords) : x_(std::move(coords)) {
  if (!x_.allFinite()) throw DomainError("point cloud has non-finite coordinates");
}

PointCloud::PointCloud(std::size_t n, std::size_t k)
    : x_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k))) {}

double PointCloud::diameter() const {
  double best = 0.0;
  for (Eigen::Index i = 0; i < x_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < x_.rows(); ++j)
      best = std::max(best, (x_.row(i) - x_.row(j)).norm());
  return best;
}

Eigen::VectorXd PointCloud::flatten() const {
  Eigen::VectorXd v(x_.size());
  const Eigen::Index k = x_.cols();
  for (Eigen::Index i = 0; i < x_.rows(); ++i)
    for (Eigen::Index c = 0; c < k; ++c) v(i * k + c) = x_(i, c);
  return v;
}

PointCloud PointCloud::unflatten(const Eigen::VectorXd& v, std::size_t n, std::size_t k) {
  if (static_cast<std::size_t>(v.size()) != n * k)
    throw DimensionError("flattened vector has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(n * k));
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  const auto kk = static_cast<Eigen::Index>(k);
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index c = 0; c < kk; ++c) x(i, c) = v(i * kk + c);
  return PointCloud(std::move(x));
}

DistanceMatrix::DistanceMatrix(Eigen::MatrixXd d) : d_(std::move(d)) {
  if (d_.rows() != d_.cols())
    throw DimensionError("distance matrix must be square, got " + std::to_string(d_.rows()) +
                         "x" + std::to_string(d_.cols()));
  const Eigen::Index n = d_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(d_(i, i)) || std::abs(d_(i, i)) > 1e-12)
      throw DomainError("distance matrix diagonal entry " + pair_name(i, i) + " is not zero");
    d_(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = d_(i, j);
      const double b = d_(j, i);
      if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("distance matrix entry " + pair_name(i, j) + " is not finite");
      if (a < 0.0 || b < 0.0)
        throw DomainError("distance matrix entry " + pair_name(i, j) + " is negative");
      if (std::abs(a - b) > 1e-12 * std::max(1.0, std::max(a, b)))
        throw DomainError("distance matrix is not symmetric at " + pair_name(i, j));
      d_(j, i) = a;
    }
  }
}

DistanceMatrix DistanceMatrix::from_points(const PointCloud& x) {
  const auto n = static_cast<Eigen::Index>(x.n());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double r = (x.matrix().row(i) - x.matrix().row(j)).norm();
      d(i, j) = r;
      d(j, i) = r;
    }
  return DistanceMatrix(std::move(d));
}

double DistanceMatrix::max_distance() const { return d_.size() == 0 ? 0.0 : d_.maxCoeff(); }

WeightMatrix::WeightMatrix(Eigen::MatrixXd w, bool clamped) : w_(std::move(w)), clamped_(clamped) {
  if (w_.rows() != w_.cols())
    throw DimensionError("weight matrix must be square, got " + std::to_string(w_.rows()) + "x" +
                         std::to_string(w_.cols()));
  const Eigen::Index n = w_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (w_(i, i) != 0.0)
      throw DomainError("weight matrix diagonal entry " + pair_name(i, i) + " must be 0");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!std::isfinite(w_(i, j)) || w_(i, j) < 0.0)
        throw DomainError("weight " + pair_name(i, j) + " must be finite and nonnegative");
      if (w_(i, j) != w_(j, i))
        throw DomainError("weight matrix is not symmetric at " + pair_name(i, j));
    }
  }
}

WeightMatrix WeightMatrix::ones(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd w = Eigen::MatrixXd::Ones(nn, nn);
  w.diagonal().setZero();
  return WeightMatrix(std::move(w));
}

WeightMatrix WeightMatrix::zeros(std::size_t n) {
  const auto nn = static_cast<Eigen::Index>(n);
  return WeightMatrix(Eigen::MatrixXd::Zero(nn, nn));
}

WeightMatrix WeightMatrix::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("weight scale must be finite and >= 0");
  return WeightMatrix(w_ * c, clamped_);
}

bool WeightMatrix::is_zero() const { return w_.size() == 0 || w_.isZero(0.0); }

PointCloud center(const PointCloud& x) {
  if (x.n() == 0) return x;
  const Eigen::RowVectorXd mean = x.matrix().colwise().mean();
  return PointCloud(x.matrix().rowwise() - mean);
}

bool is_centered(const PointCloud& x) {
  if (x.n() == 0) return true;
  const double tol = 1e-12 * static_cast<double>(x.n()) * std::max(x.diameter(), 1.0);
  const Eigen::RowVectorXd sum = x.matrix().colwise().sum();
  return sum.cwiseAbs().maxCoeff() <= tol;
}

}  // namespace geostress
