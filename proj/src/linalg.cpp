#include "geostress/linalg.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace geostress {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffTolerance = 1e-12;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q)
    for (Eigen::Index p = 0; p < q; ++p) s += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(s);
}

// A ← Jᵀ A J and V ← V J for the plane rotation zeroing a(p,q).
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    const double arp = a(r, p);
    const double arq = a(r, q);
    a(r, p) = c * arp - s * arq;
    a(r, q) = s * arp + c * arq;
  }
  for (Eigen::Index r = 0; r < n; ++r) {
    const double apr = a(p, r);
    const double aqr = a(q, r);
    a(p, r) = c * apr - s * aqr;
    a(q, r) = s * apr + c * aqr;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

Eigen::MatrixXd gram_from_distances(const DistanceMatrix& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  if (n == 0) return {};
  const Eigen::MatrixXd sq = d.matrix().cwiseProduct(d.matrix());
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const double total_mean = row_mean.mean();
  Eigen::MatrixXd b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      b(i, j) = -0.5 * (sq(i, j) - row_mean(i) - row_mean(j) + total_mean);
  // Exact symmetry regardless of summation order.
  return 0.5 * (b + b.transpose());
}

EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& b) {
  if (b.rows() != b.cols()) throw DimensionError("symmetric_eigen: matrix is not square");
  const Eigen::Index n = b.rows();
  const double scale = std::max(1.0, b.size() ? b.cwiseAbs().maxCoeff() : 0.0);
  if (n > 0 && (b - b.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw DomainError("symmetric_eigen: matrix is not symmetric");

  Eigen::MatrixXd a = 0.5 * (b + b.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = kOffTolerance * a.norm();
  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm(a) > threshold) {
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index l, Eigen::Index r) { return a(l, l) > a(r, r); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = order[static_cast<std::size_t>(c)];
    out.values(c) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    const double peak = col.cwiseAbs().maxCoeff();
    // First entry within rounding of the peak magnitude decides the sign.
    for (Eigen::Index r = 0; r < n; ++r) {
      if (std::abs(col(r)) >= peak - 1e-12) {
        if (col(r) < 0.0) col = -col;
        break;
      }
    }
    out.vectors.col(c) = col;
  }
  return out;
}

MdsEmbedding classical_mds(const DistanceMatrix& d, std::size_t k) {
  const std::size_t n = d.size();
  if (k < 1 || k + 1 > n)
    throw DimensionError("classical_mds: k must satisfy 1 <= k <= n-1 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  const EigenDecomposition eig = symmetric_eigen(gram_from_distances(d));
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), kk);
  for (Eigen::Index c = 0; c < kk; ++c)
    x.col(c) = eig.vectors.col(c) * std::sqrt(std::max(eig.values(c), 0.0));
  return {center(PointCloud(std::move(x))), eig.values};
}

bool euclidean_embeddability(const DistanceMatrix& d, double tol) {
  if (d.size() <= 1) return true;
  const EigenDecomposition eig = symmetric_eigen(gram_from_distances(d));
  const double biggest = eig.values.cwiseAbs().maxCoeff();
  return eig.values.minCoeff() >= -tol * biggest;
}

}  // namespace geostress
