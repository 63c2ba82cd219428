#pragma once

#include "geostress/core.hpp"
#include "geostress/experiments.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace geostress::io {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Comma-separated rows without a header. Blank lines are ignored; every
/// row must have the same number of fields. Throws DomainError with the
/// line number on malformed input.
Eigen::MatrixXd parse_csv_matrix(std::istream& in);
void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& m);

Eigen::MatrixXd read_csv_matrix(const std::filesystem::path& path);
void write_csv_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m);

DistanceMatrix read_distance_matrix(const std::filesystem::path& path);
PointCloud read_point_cloud(const std::filesystem::path& path);

struct SvgOptions {
  int size = 800;          // square viewport, pixels
  double radius = 3.0;     // circle radius, pixels
  double margin = 0.05;    // fraction of the viewport on every side
};

/// Scatter of the first two coordinates (second axis 0 when k = 1), scaled
/// uniformly to fit the viewport. No axes.
void write_svg_scatter(std::ostream& out, const PointCloud& x, const SvgOptions& opts = {});
void write_svg_scatter(const std::filesystem::path& path, const PointCloud& x,
                       const SvgOptions& opts = {});

std::string method_name(Method m);

/// One row per cell: theta,a,method,status,init_cost,final_cost,iterations,
/// converged[,wall_time],diagnosis. Wall time is optional because it breaks
/// byte-identical reruns.
void write_sweep_csv(std::ostream& out, const SweepReport& report, bool with_timing = false);

/// Aligned plain-text table of the sweep.
std::string format_sweep_table(const SweepReport& report);

}  // namespace geostress::io
