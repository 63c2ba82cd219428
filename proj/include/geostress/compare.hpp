#pragma once

#include "geostress/core.hpp"

#include <vector>

namespace geostress {

struct HausdorffDistance {
  double a_to_b;  // max over a ∈ A of min over b ∈ B of ‖a − b‖
  double b_to_a;
  double value;   // max of the two directed distances
};

/// Hausdorff distance between the rows of A and B taken as unlabeled point
/// sets in R^k. Throws DimensionError on empty clouds or different k.
HausdorffDistance hausdorff_points(const PointCloud& a, const PointCloud& b);

/// Smallest RMS row distance between g(X) and Y over all isometries g
/// (translations, rotations and reflections). Rows correspond by index.
/// Computed by centering and orthogonal Procrustes.
double congruence_distance(const PointCloud& x, const PointCloud& y);

/// Root-mean-square distance between corresponding rows, with no alignment.
double rms_distance(const PointCloud& x, const PointCloud& y);

/// Hausdorff distance between two finite samples of solution sets with
/// congruence_distance as the ground metric.
double solution_set_distance(const std::vector<PointCloud>& s1, const std::vector<PointCloud>& s2);

/// Greedy grouping into congruence classes: a cloud joins the first class
/// whose representative is within `tol`. Returns the class index of each
/// cloud.
std::vector<std::size_t> congruence_classes(const std::vector<PointCloud>& clouds, double tol);

}  // namespace geostress
