#include "geostress/io.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>
#include <vector>

namespace geostress::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    throw DomainError("CSV line " + std::to_string(line) + ": cannot parse number '" +
                      std::string(field) + "'");
  return v;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Eigen::MatrixXd parse_csv_matrix(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      row.push_back(parse_field(rest.substr(0, comma), lineno));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw DomainError("CSV line " + std::to_string(lineno) + ": expected " +
                        std::to_string(rows.front().size()) + " fields, got " +
                        std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size());
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

void write_csv_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd read_csv_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  try {
    return parse_csv_matrix(in);
  } catch (const DomainError& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

void write_csv_matrix(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
  auto out = open_output(path);
  write_csv_matrix(out, m);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
  Eigen::MatrixXd m = read_csv_matrix(path);
  if (m.rows() == 0) throw DomainError(path.string() + ": empty distance matrix");
  try {
    return DistanceMatrix(std::move(m));
  } catch (const std::exception& e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

PointCloud read_point_cloud(const std::filesystem::path& path) {
  Eigen::MatrixXd m = read_csv_matrix(path);
  if (m.rows() == 0) throw DomainError(path.string() + ": empty point cloud");
  return PointCloud(std::move(m));
}

void write_svg_scatter(std::ostream& out, const PointCloud& x, const SvgOptions& opts) {
  const double size = opts.size;
  const double inner = size * (1.0 - 2.0 * opts.margin);
  double lo[2] = {0.0, 0.0};
  double hi[2] = {0.0, 0.0};
  auto coord = [&](std::size_t i, int axis) {
    return static_cast<std::size_t>(axis) < x.k() ? x(i, static_cast<std::size_t>(axis)) : 0.0;
  };
  for (int axis = 0; axis < 2; ++axis) {
    for (std::size_t i = 0; i < x.n(); ++i) {
      const double v = coord(i, axis);
      if (i == 0 || v < lo[axis]) lo[axis] = v;
      if (i == 0 || v > hi[axis]) hi[axis] = v;
    }
  }
  const double span = std::max({hi[0] - lo[0], hi[1] - lo[1], 1e-300});
  const double scale = inner / span;
  // Center the data's bounding box in the viewport.
  const double off_x = 0.5 * (size - (hi[0] - lo[0]) * scale);
  const double off_y = 0.5 * (size - (hi[1] - lo[1]) * scale);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\""
      << opts.size << "\" viewBox=\"0 0 " << opts.size << ' ' << opts.size << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << std::fixed << std::setprecision(3);
  for (std::size_t i = 0; i < x.n(); ++i) {
    const double px = off_x + (coord(i, 0) - lo[0]) * scale;
    const double py = size - (off_y + (coord(i, 1) - lo[1]) * scale);
    out << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"" << opts.radius
        << "\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
}

void write_svg_scatter(const std::filesystem::path& path, const PointCloud& x,
                       const SvgOptions& opts) {
  auto out = open_output(path);
  write_svg_scatter(out, x, opts);
}

std::string method_name(Method m) { return m == Method::Bfgs ? "bfgs" : "bh"; }

void write_sweep_csv(std::ostream& out, const SweepReport& report, bool with_timing) {
  out << "theta,a,method,status,init_cost,final_cost,iterations,converged";
  if (with_timing) out << ",wall_time";
  out << ",diagnosis\n";
  for (const auto& r : report.rows) {
    out << format_double(r.theta) << ',' << format_double(r.a) << ',' << method_name(r.method)
        << ',' << (r.failed ? "FAILED" : "ok") << ',';
    if (r.failed)
      out << ",,,";
    else
      out << format_double(r.init_cost) << ',' << format_double(r.final_cost) << ',' << r.n_iters
          << ',' << (r.converged ? "true" : "false");
    if (with_timing) out << ',' << format_double(r.wall_time);
    out << ',' << csv_escape(r.diagnosis) << '\n';
  }
}

std::string format_sweep_table(const SweepReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "theta" << std::setw(8) << "a" << std::setw(8) << "method"
     << std::right << std::setw(14) << "init_cost" << std::setw(14) << "final_cost"
     << std::setw(8) << "iters" << std::setw(11) << "converged" << std::setw(10) << "time[s]"
     << '\n';
  for (const auto& r : report.rows) {
    os << std::left << std::setw(8) << format_double(r.theta) << std::setw(8)
       << format_double(r.a) << std::setw(8) << method_name(r.method) << std::right;
    if (r.failed) {
      os << std::setw(14) << "FAILED" << "  " << r.diagnosis << '\n';
      continue;
    }
    std::ostringstream init, fin, t;
    init << std::setprecision(4) << r.init_cost;
    fin << std::setprecision(4) << r.final_cost;
    t << std::fixed << std::setprecision(2) << r.wall_time;
    os << std::setw(14) << init.str() << std::setw(14) << fin.str() << std::setw(8) << r.n_iters
       << std::setw(11) << (r.converged ? "yes" : "no") << std::setw(10) << t.str() << '\n';
  }
  return os.str();
}

}  // namespace geostress::io
