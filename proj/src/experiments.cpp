#include "geostress/experiments.hpp"

#include "geostress/compare.hpp"
#include "geostress/error.hpp"
#include "geostress/graph.hpp"
#include "geostress/parallel.hpp"
#include "geostress/random.hpp"
#include "geostress/weights.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace geostress {

PointCloud gen_ring(std::size_t n, double r_in, double r_out, std::uint64_t seed,
                    RingSampling sampling) {
  if (!(r_in > 0.0) || !(r_in < r_out) || !std::isfinite(r_out))
    throw DomainError("ring radii must satisfy 0 < r_in < r_out");
  if (n < 1) throw DomainError("ring needs at least one point");
  Rng rng(seed);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), 2);
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    const double u = rng.uniform();
    const double r = sampling == RingSampling::UniformArea
                         ? std::sqrt(u * (r_out * r_out - r_in * r_in) + r_in * r_in)
                         : r_in + u * (r_out - r_in);
    x(i, 0) = r * std::cos(angle);
    x(i, 1) = r * std::sin(angle);
  }
  return PointCloud(std::move(x));
}

SweepReport continuity_sweep(const DistanceMatrix& d, const std::vector<double>& thetas,
                             const std::vector<double>& stiffnesses,
                             const std::vector<Method>& methods, std::size_t k,
                             const OptimConfig& cfg, StressKernel kernel, std::size_t jobs,
                             std::uint64_t dataset_seed) {
  SweepReport report;
  report.dataset_seed = dataset_seed;
  for (double theta : thetas)
    for (double a : stiffnesses)
      for (Method m : methods) {
        SweepRow row;
        row.theta = theta;
        row.a = a;
        row.method = m;
        report.rows.push_back(row);
      }

  parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    SweepRow& row = report.rows[idx];
    const auto start = std::chrono::steady_clock::now();
    try {
      const WeightMatrix w = build_weight_matrix(d, weight::TanhSigmoid{row.a, row.theta});
      const OptimResult r = solve_nlm(d, w, k, kernel, init::Isomap{row.theta}, row.method, cfg);
      row.init_cost = r.init_cost;
      row.final_cost = r.cost;
      row.n_iters = r.n_iters;
      row.converged = r.converged;
    } catch (const InitializerError& e) {
      row.failed = true;
      row.diagnosis = e.what();
    } catch (const NonFiniteError& e) {
      row.failed = true;
      row.diagnosis = std::string("optimizer failed: ") + e.what();
    }
    if (row.failed) {
      row.init_cost = std::numeric_limits<double>::quiet_NaN();
      row.final_cost = std::numeric_limits<double>::quiet_NaN();
    }
    row.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  });
  return report;
}

DistanceMatrix rigidity_distances() {
  Eigen::Matrix3d d;
  d << 0.0, 1.0, 1.0, 1.0, 0.0, std::numbers::sqrt2, 1.0, std::numbers::sqrt2, 0.0;
  return DistanceMatrix(d);
}

WeightMatrix rigidity_weights(double eta) {
  if (!(eta >= 0.0) || !(eta <= 1.0)) throw DomainError("eta must lie in [0, 1]");
  Eigen::Matrix3d w;
  w << 0.0, 1.0, 1.0, 1.0, 0.0, eta, 1.0, eta, 0.0;
  return WeightMatrix(w);
}

PointCloud collinear_configuration() {
  Eigen::MatrixXd x(3, 2);
  x << 0.0, 0.0, 1.0, 0.0, -1.0, 0.0;
  return PointCloud(std::move(x));
}

PointCloud triangle_configuration() {
  Eigen::MatrixXd x(3, 2);
  x << 0.0, 0.0, 0.0, 1.0, 1.0, 0.0;
  return PointCloud(std::move(x));
}

namespace {

std::vector<PointCloud> clouds_of(const std::vector<OptimResult>& results) {
  std::vector<PointCloud> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(r.x);
  return out;
}

RigidityRow rigidity_row(double eta, std::size_t n_starts, const OptimConfig& cfg,
                         double class_tol, std::size_t jobs) {
  const DistanceMatrix d = rigidity_distances();
  const auto runs = multi_start_solutions(d, rigidity_weights(eta), 2, n_starts, cfg,
                                          StressKernel::SquaredDifferences, jobs);
  RigidityRow row;
  row.eta = eta;
  row.starts = n_starts;
  row.best_cost = runs.front().cost;
  row.sample = clouds_of(solution_sample(runs, cfg.f_tol));
  row.sample_size = row.sample.size();
  const auto labels = congruence_classes(row.sample, class_tol);
  row.classes = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  for (std::size_t i = 0; i < row.sample.size(); ++i)
    for (std::size_t j = i + 1; j < row.sample.size(); ++j)
      row.max_pairwise = std::max(row.max_pairwise, congruence_distance(row.sample[i], row.sample[j]));
  return row;
}

}  // namespace

RigidityReport rigidity_demo(const std::vector<double>& etas, std::size_t n_starts,
                             const OptimConfig& cfg, double class_tol, std::size_t jobs) {
  if (etas.empty()) throw DomainError("rigidity_demo: no eta values");
  RigidityReport report;
  const RigidityRow flexible = rigidity_row(0.0, n_starts, cfg, class_tol, jobs);
  for (double eta : etas) {
    RigidityRow row = eta == 0.0 ? flexible : rigidity_row(eta, n_starts, cfg, class_tol, jobs);
    row.distance_to_flexible = solution_set_distance(row.sample, flexible.sample);
    report.rows.push_back(std::move(row));
  }
  report.collinear_stress =
      stress(collinear_configuration(), rigidity_distances(), rigidity_weights(0.0));
  report.collinear_to_triangle =
      congruence_distance(collinear_configuration(), triangle_configuration());
  return report;
}

ZeroWeightReport zero_weight_demo(const DistanceMatrix& d, const WeightMatrix& w,
                                  const PointCloud& x, const std::vector<double>& etas,
                                  StressKernel kernel) {
  if (w.is_zero()) throw DomainError("zero_weight_demo: weight matrix must be nonzero");
  ZeroWeightReport report;
  report.base_stress = stress(x, d, w, kernel);
  report.exact_zero = report.base_stress == 0.0;
  for (double eta : etas) {
    const double s = stress(x, d, w.scaled(eta), kernel);
    const double ratio =
        report.exact_zero ? std::numeric_limits<double>::quiet_NaN() : s / report.base_stress;
    report.rows.push_back({eta, s, ratio});
  }
  return report;
}

HeavisideReport heaviside_convergence(double theta, const std::vector<double>& a_list,
                                      const std::vector<double>& d_grid, double exclusion) {
  if (!(exclusion > 0.0)) throw DomainError("heaviside_convergence: exclusion must be > 0");
  if (!(theta > 0.0)) throw DomainError("heaviside_convergence: theta must be > 0");
  for (double dv : d_grid)
    if (!(dv > 0.0) || !std::isfinite(dv))
      throw DomainError("heaviside_convergence: grid points must lie in (0, inf)");

  HeavisideReport report;
  report.theta = theta;
  report.exclusion = exclusion;
  const WeightFamily step = weight::Heaviside{theta};
  for (double a : a_list) {
    const WeightFamily smooth = weight::TanhSigmoid{a, theta};
    HeavisideRow row;
    row.a = a;
    row.at_threshold = std::abs(eval_weight(smooth, theta) - eval_weight(step, theta));
    double nearest = std::numeric_limits<double>::infinity();
    for (double dv : d_grid) {
      const double gap = std::abs(dv - theta);
      if (gap < exclusion) continue;
      nearest = std::min(nearest, gap);
      const double dev = std::abs(eval_weight(smooth, dv) - eval_weight(step, dv));
      if (dev > row.sup_deviation) {
        row.sup_deviation = dev;
        row.worst_d = dv;
      }
    }
    row.closed_form = std::isfinite(nearest) ? 0.5 * (1.0 - std::tanh(a * nearest)) : 0.0;
    if (!report.rows.empty() && row.sup_deviation > report.rows.back().sup_deviation)
      report.monotone = false;
    report.rows.push_back(row);
  }
  return report;
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw DomainError("uniform_grid: need step > 0 and hi >= lo");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
  out.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace geostress
