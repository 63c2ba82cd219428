#include "geostress/compare.hpp"

#include "geostress/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace geostress {

namespace {

void require_same_shape(const PointCloud& x, const PointCloud& y, const char* what) {
  if (x.n() != y.n() || x.k() != y.k())
    throw DimensionError(std::string(what) + ": clouds have shapes " + std::to_string(x.n()) +
                         "x" + std::to_string(x.k()) + " and " + std::to_string(y.n()) + "x" +
                         std::to_string(y.k()));
}

double directed(const PointCloud& a, const PointCloud& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.n() && nearest > worst; ++j)
      nearest = std::min(nearest, (a.row(i) - b.row(j)).squaredNorm());
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

template <class Metric>
double directed_sets(const std::vector<PointCloud>& a, const std::vector<PointCloud>& b,
                     Metric&& metric) {
  double worst = 0.0;
  for (const auto& x : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& y : b) nearest = std::min(nearest, metric(x, y));
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

HausdorffDistance hausdorff_points(const PointCloud& a, const PointCloud& b) {
  if (a.n() == 0 || b.n() == 0) throw DimensionError("hausdorff_points: empty cloud");
  if (a.k() != b.k()) throw DimensionError("hausdorff_points: clouds live in different dimensions");
  const double ab = directed(a, b);
  const double ba = directed(b, a);
  return {ab, ba, std::max(ab, ba)};
}

double rms_distance(const PointCloud& x, const PointCloud& y) {
  require_same_shape(x, y, "rms_distance");
  if (x.n() == 0) return 0.0;
  return std::sqrt((x.matrix() - y.matrix()).squaredNorm() / static_cast<double>(x.n()));
}

double congruence_distance(const PointCloud& x, const PointCloud& y) {
  require_same_shape(x, y, "congruence_distance");
  if (x.n() == 0 || x == y) return 0.0;
  const Eigen::MatrixXd a = center(x).matrix();
  const Eigen::MatrixXd b = center(y).matrix();
  // Optimal orthogonal R = U Vᵀ from the SVD of aᵀb. The residual is formed
  // explicitly; the trace identity loses half the digits near zero.
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a.transpose() * b,
                                              Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd r = svd.matrixU() * svd.matrixV().transpose();
  const double residual = (a * r - b).squaredNorm();
  return std::sqrt(std::max(residual, 0.0) / static_cast<double>(x.n()));
}

double solution_set_distance(const std::vector<PointCloud>& s1, const std::vector<PointCloud>& s2) {
  if (s1.empty() || s2.empty()) throw DimensionError("solution_set_distance: empty sample");
  const auto metric = [](const PointCloud& x, const PointCloud& y) {
    return congruence_distance(x, y);
  };
  return std::max(directed_sets(s1, s2, metric), directed_sets(s2, s1, metric));
}

std::vector<std::size_t> congruence_classes(const std::vector<PointCloud>& clouds, double tol) {
  std::vector<std::size_t> label(clouds.size());
  std::vector<std::size_t> representatives;
  for (std::size_t i = 0; i < clouds.size(); ++i) {
    auto it = std::find_if(representatives.begin(), representatives.end(), [&](std::size_t r) {
      return congruence_distance(clouds[r], clouds[i]) <= tol;
    });
    if (it == representatives.end()) {
      label[i] = representatives.size();
      representatives.push_back(i);
    } else {
      label[i] = static_cast<std::size_t>(it - representatives.begin());
    }
  }
  return label;
}

}  // namespace geostress
