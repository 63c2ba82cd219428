#include "geostress/compare.hpp"
#include "geostress/error.hpp"
#include "geostress/experiments.hpp"
#include "testing.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace geostress;

namespace {

PointCloud cloud(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return PointCloud(std::move(m));
}

// Brute force over a fine grid of planar rotations and both reflections.
double brute_force_congruence(const PointCloud& x, const PointCloud& y) {
  const Eigen::MatrixXd a = center(x).matrix();
  const Eigen::MatrixXd b = center(y).matrix();
  double best = std::numeric_limits<double>::infinity();
  const int steps = 200000;
  for (int s = 0; s < steps; ++s) {
    const double t = 2.0 * std::numbers::pi * s / steps;
    Eigen::Matrix2d r;
    r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    for (double flip : {1.0, -1.0}) {
      Eigen::Matrix2d q = r;
      q.col(1) *= flip;
      best = std::min(best, (a * q - b).squaredNorm());
    }
  }
  return std::sqrt(best / static_cast<double>(x.n()));
}

}  // namespace

TEST_SUITE("hausdorff") {
  TEST_CASE("worked examples") {
    const auto a = cloud({{0.0}, {1.0}});
    const auto b = cloud({{0.0}});
    const auto h = hausdorff_points(a, b);
    CHECK(h.a_to_b == 1.0);
    CHECK(h.b_to_a == 0.0);
    CHECK(h.value == 1.0);
    CHECK(hausdorff_points(cloud({{0.0}}), cloud({{3.0}})).value == 3.0);
    CHECK(hausdorff_points(a, a).value == 0.0);
  }

  TEST_CASE("row order does not matter") {
    const auto a = cloud({{0, 0}, {1, 0}, {0, 2}});
    const auto b = cloud({{0, 2}, {0, 0}, {1, 0}});
    CHECK(hausdorff_points(a, b).value == 0.0);
  }

  TEST_CASE("metric properties on random sets") {
    Rng rng(21);
    for (int t = 0; t < 50; ++t) {
      const auto a = testing::random_cloud(rng, 1 + t % 7, 2);
      const auto b = testing::random_cloud(rng, 1 + t % 5, 2);
      const auto c = testing::random_cloud(rng, 1 + t % 3, 2);
      const double ab = hausdorff_points(a, b).value;
      CHECK(ab == hausdorff_points(b, a).value);
      CHECK(ab >= 0.0);
      CHECK(ab <= hausdorff_points(a, c).value + hausdorff_points(c, b).value + 1e-12);
    }
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(hausdorff_points(PointCloud(Eigen::MatrixXd(0, 2)), cloud({{0, 0}})),
                    DimensionError);
    CHECK_THROWS_AS(hausdorff_points(cloud({{0.0}}), cloud({{0, 0}})), DimensionError);
  }
}

TEST_SUITE("congruence") {
  TEST_CASE("zero under rigid motions, including reflections") {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
      const std::size_t k = 1 + t % 3;
      const auto x = testing::random_cloud(rng, 8, k);
      Eigen::RowVectorXd shift(static_cast<Eigen::Index>(k));
      for (Eigen::Index c = 0; c < shift.size(); ++c) shift(c) = rng.uniform(-5, 5);
      const auto y = testing::apply_isometry(x, testing::random_orthogonal(rng, k, t % 2 == 1), shift);
      CHECK(congruence_distance(x, y) <= 1e-12);
      CHECK(congruence_distance(x, x) == 0.0);
    }
  }

  TEST_CASE("collinear versus triangle configuration") {
    const auto c = collinear_configuration();
    const auto t = triangle_configuration();
    const double expected = brute_force_congruence(c, t);
    CHECK(congruence_distance(c, t) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(congruence_distance(c, t) == doctest::Approx(0.41024635224343886).epsilon(1e-12));
  }

  TEST_CASE("matches brute force on random planar clouds") {
    Rng rng(23);
    for (int t = 0; t < 5; ++t) {
      const auto x = testing::random_cloud(rng, 6, 2);
      const auto y = testing::random_cloud(rng, 6, 2);
      CHECK(congruence_distance(x, y) == doctest::Approx(brute_force_congruence(x, y)).epsilon(1e-8));
    }
  }

  TEST_CASE("pseudometric properties") {
    Rng rng(24);
    for (int t = 0; t < 50; ++t) {
      const auto x = testing::random_cloud(rng, 5, 2);
      const auto y = testing::random_cloud(rng, 5, 2);
      const auto z = testing::random_cloud(rng, 5, 2);
      const double xy = congruence_distance(x, y);
      CHECK(xy == doctest::Approx(congruence_distance(y, x)).epsilon(1e-12));
      CHECK(xy <= congruence_distance(x, z) + congruence_distance(z, y) + 1e-12);
      CHECK(xy <= rms_distance(x, y) + 1e-12);
    }
  }

  TEST_CASE("shape mismatch") {
    CHECK_THROWS_AS(congruence_distance(cloud({{0, 0}}), cloud({{0, 0}, {1, 1}})), DimensionError);
    CHECK_THROWS_AS(rms_distance(cloud({{0.0}}), cloud({{0, 0}})), DimensionError);
  }

  TEST_CASE("rms distance") {
    CHECK(rms_distance(cloud({{0, 0}, {0, 0}}), cloud({{3, 4}, {0, 0}})) ==
          doctest::Approx(std::sqrt(12.5)));
  }
}

TEST_SUITE("solution sets") {
  TEST_CASE("identical samples and congruent copies are at distance zero") {
    const auto t = triangle_configuration();
    Rng rng(25);
    const auto moved = testing::apply_isometry(t, testing::random_orthogonal(rng, 2, true),
                                               Eigen::RowVector2d(2.0, -1.0));
    CHECK(solution_set_distance({t}, {t}) == 0.0);
    CHECK(solution_set_distance({t}, {moved}) <= 1e-12);
  }

  TEST_CASE("a set containing the other") {
    const auto c = collinear_configuration();
    const auto t = triangle_configuration();
    const double ct = congruence_distance(c, t);
    CHECK(solution_set_distance({t}, {t, c}) == doctest::Approx(ct));
    CHECK(solution_set_distance({t, c}, {t, c}) == 0.0);
  }

  TEST_CASE("empty samples are rejected") {
    CHECK_THROWS_AS(solution_set_distance({}, {triangle_configuration()}), DimensionError);
  }

  TEST_CASE("congruence classes") {
    const auto c = collinear_configuration();
    const auto t = triangle_configuration();
    Rng rng(26);
    const auto t2 = testing::apply_isometry(t, testing::random_orthogonal(rng, 2, false),
                                            Eigen::RowVector2d(1.0, 1.0));
    const auto labels = congruence_classes({t, c, t2}, 1e-6);
    CHECK(labels == std::vector<std::size_t>{0, 1, 0});
  }
}
