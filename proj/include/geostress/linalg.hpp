#pragma once

#include "geostress/core.hpp"

#include <Eigen/Core>

namespace geostress {

/// Eigenpairs of a symmetric matrix. values are sorted descending and
/// column i of vectors pairs with values(i). Each vector's largest-magnitude
/// entry is positive.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  int sweeps = 0;
};

/// B = -1/2 J (D∘D) J with J = I - 11ᵀ/n.
Eigen::MatrixXd gram_from_distances(const DistanceMatrix& d);

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// 1e-12·‖B‖_F (at most 100 sweeps). Throws DomainError when B is not
/// symmetric to 1e-10.
EigenDecomposition symmetric_eigen(const Eigen::MatrixXd& b);

struct MdsEmbedding {
  PointCloud x;
  /// Full Gram spectrum, descending, negative values kept.
  Eigen::VectorXd spectrum;
};

/// Torgerson scaling: the k leading eigenvectors scaled by sqrt(max(λ,0)).
/// Requires 1 <= k <= n-1.
MdsEmbedding classical_mds(const DistanceMatrix& d, std::size_t k);

/// True iff the smallest Gram eigenvalue is >= -tol·max|λ|.
bool euclidean_embeddability(const DistanceMatrix& d, double tol = 1e-9);

}  // namespace geostress
