#include "geostress/weights.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace geostress {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string("weight parameter ") + name + " must be finite and > 0");
}

}  // namespace

void validate(const WeightFamily& family) {
  std::visit(overloaded{
                 [](const weight::Constant&) {},
                 [](const weight::SammonInverse&) {},
                 [](const weight::ExpDecay& f) { require_positive(f.beta, "beta"); },
                 [](const weight::PowerDecay& f) { require_positive(f.z, "z"); },
                 [](const weight::Heaviside& f) { require_positive(f.theta, "theta"); },
                 [](const weight::TanhSigmoid& f) {
                   require_positive(f.a, "a");
                   require_positive(f.theta, "theta");
                 },
             },
             family);
}

double eval_weight(const WeightFamily& family, double d) {
  if (!(d >= 0.0)) throw DomainError("weight evaluated at a negative or NaN distance");
  return std::visit(
      overloaded{
          [](const weight::Constant&) { return 1.0; },
          [d](const weight::SammonInverse&) {
            if (d == 0.0) throw DomainError("Sammon weight 1/d is undefined at d = 0");
            return 1.0 / d;
          },
          [d](const weight::ExpDecay& f) { return std::exp(-f.beta * d); },
          [d](const weight::PowerDecay& f) {
            if (d == 0.0) throw DomainError("power weight d^-z is undefined at d = 0");
            return std::pow(d, -f.z);
          },
          [d](const weight::Heaviside& f) { return d <= f.theta ? 1.0 : 0.0; },
          [d](const weight::TanhSigmoid& f) { return 0.5 * (1.0 - std::tanh(f.a * (d - f.theta))); },
      },
      family);
}

WeightMatrix build_weight_matrix(const DistanceMatrix& d, const WeightFamily& family) {
  validate(family);
  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  bool clamped = false;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      double v = 0.0;
      try {
        v = eval_weight(family, d.matrix()(i, j));
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " (pair " + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
      const double c = std::clamp(v, 0.0, 1.0);
      clamped = clamped || c != v;
      w(i, j) = c;
      w(j, i) = c;
    }
  return WeightMatrix(std::move(w), clamped);
}

std::string describe(const WeightFamily& family) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const weight::Constant&) { os << "constant"; },
                 [&](const weight::SammonInverse&) { os << "sammon"; },
                 [&](const weight::ExpDecay& f) { os << "exp(beta=" << f.beta << ")"; },
                 [&](const weight::PowerDecay& f) { os << "power(z=" << f.z << ")"; },
                 [&](const weight::Heaviside& f) { os << "heaviside(theta=" << f.theta << ")"; },
                 [&](const weight::TanhSigmoid& f) {
                   os << "tanh(a=" << f.a << ",theta=" << f.theta << ")";
                 },
             },
             family);
  return os.str();
}

}  // namespace geostress
