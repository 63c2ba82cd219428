#include "geostress/stress.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace geostress {

namespace {

constexpr double kCoincident = 1e-12;

void check_shapes(std::size_t n, const DistanceMatrix& d, const WeightMatrix& w) {
  if (d.size() != n || w.size() != n)
    throw DimensionError("stress: point cloud has " + std::to_string(n) + " rows, D is " +
                         std::to_string(d.size()) + ", W is " + std::to_string(w.size()));
}

// Accumulates the i<j half-sum and the matching gradient. `grad` may be null.
double accumulate(const double* x, std::size_t n, std::size_t k, const DistanceMatrix& d,
                  const WeightMatrix& w, StressKernel kernel, double* grad) {
  const Eigen::MatrixXd& dm = d.matrix();
  const Eigen::MatrixXd& wm = w.matrix();
  if (grad) std::fill(grad, grad + n * k, 0.0);
  double half = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double* xj = x + j * k;
    for (std::size_t i = j + 1; i < n; ++i) {
      const double wij = wm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (wij == 0.0) continue;
      const double dij = dm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double* xi = x + i * k;
      double r2 = 0.0;
      for (std::size_t c = 0; c < k; ++c) {
        const double t = xi[c] - xj[c];
        r2 += t * t;
      }
      double coef = 0.0;
      if (kernel == StressKernel::SquaredDifferences) {
        const double res = r2 - dij * dij;
        half += wij * res * res;
        coef = 8.0 * wij * res;
      } else {
        const double r = std::sqrt(r2);
        const double res = r - dij;
        half += wij * res * res;
        coef = r < kCoincident ? 0.0 : 4.0 * wij * res / r;
      }
      if (grad && coef != 0.0) {
        double* gi = grad + i * k;
        double* gj = grad + j * k;
        for (std::size_t c = 0; c < k; ++c) {
          const double t = coef * (xi[c] - xj[c]);
          gi[c] += t;
          gj[c] -= t;
        }
      }
    }
  }
  return 2.0 * half;
}

}  // namespace

double stress(const PointCloud& x, const DistanceMatrix& d, const WeightMatrix& w,
              StressKernel kernel) {
  check_shapes(x.n(), d, w);
  if (x.k() == 0) throw DimensionError("stress: embedding dimension must be >= 1");
  const Eigen::VectorXd flat = x.flatten();
  return accumulate(flat.data(), x.n(), x.k(), d, w, kernel, nullptr);
}

Eigen::MatrixXd stress_gradient(const PointCloud& x, const DistanceMatrix& d,
                                const WeightMatrix& w, StressKernel kernel) {
  Eigen::VectorXd g;
  stress_and_gradient(x.flatten(), x.k(), d, w, kernel, g);
  return PointCloud::unflatten(g, x.n(), x.k()).matrix();
}

double stress_and_gradient(const Eigen::VectorXd& flat, std::size_t k, const DistanceMatrix& d,
                           const WeightMatrix& w, StressKernel kernel, Eigen::VectorXd& grad) {
  if (k == 0) throw DimensionError("stress: embedding dimension must be >= 1");
  const std::size_t n = d.size();
  if (static_cast<std::size_t>(flat.size()) != n * k)
    throw DimensionError("stress: coordinate vector has " + std::to_string(flat.size()) +
                         " entries, expected " + std::to_string(n * k));
  check_shapes(n, d, w);
  grad.resize(static_cast<Eigen::Index>(n * k));
  return accumulate(flat.data(), n, k, d, w, kernel, grad.data());
}

double dgp_residual(const PointCloud& x, const DistanceMatrix& d, const DistanceGraph& g) {
  if (x.n() != d.size() || g.n() != d.size())
    throw DimensionError("dgp_residual: mismatched sizes");
  double worst = 0.0;
  for (const auto& e : g.edges()) {
    const double r = (x.row(e.i) - x.row(e.j)).norm();
    worst = std::max(worst, std::abs(r - d(e.i, e.j)));
  }
  return worst;
}

double edge_bound_excess(const PointCloud& x, const DistanceMatrix& d, const WeightMatrix& w,
                         double cost, StressKernel kernel) {
  check_shapes(x.n(), d, w);
  double worst = -std::numeric_limits<double>::infinity();
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double wij = w(i, j);
      if (wij <= 0.0) continue;
      const double slack = std::sqrt(std::max(cost, 0.0) / wij);
      const double r = (x.row(i) - x.row(j)).norm();
      const double excess = kernel == StressKernel::SquaredDifferences
                                ? r * r - (d(i, j) * d(i, j) + slack)
                                : r - (d(i, j) + slack);
      worst = std::max(worst, excess);
    }
  return worst;
}

}  // namespace geostress
