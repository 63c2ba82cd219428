#pragma once

#include "geostress/core.hpp"

#include <string>
#include <variant>

namespace geostress {

namespace weight {

/// ω(d) = 1: least-square scaling.
struct Constant {};
/// ω(d) = 1/d: Sammon's nonlinear mapping.
struct SammonInverse {};
/// ω(d) = exp(-β d).
struct ExpDecay {
  double beta;
};
/// ω(d) = d^(-z).
struct PowerDecay {
  double z;
};
/// ω(d) = H(θ - d) with H(0) = 1, so d == θ is kept.
struct Heaviside {
  double theta;
};
/// ω(d) = (1 - tanh(a (d - θ))) / 2, a smooth step of stiffness a.
struct TanhSigmoid {
  double a;
  double theta;
};

}  // namespace weight

using WeightFamily = std::variant<weight::Constant, weight::SammonInverse, weight::ExpDecay,
                                  weight::PowerDecay, weight::Heaviside, weight::TanhSigmoid>;

/// Throws DomainError on nonpositive family parameters.
void validate(const WeightFamily& family);

/// Evaluates ω(d). Throws DomainError for d < 0 and for d == 0 with the
/// SammonInverse and PowerDecay families.
double eval_weight(const WeightFamily& family, double d);

/// w_ij = clamp(ω(d_ij), 0, 1) for i ≠ j, zero diagonal. Whether any entry
/// was clamped is recorded in WeightMatrix::clamped().
WeightMatrix build_weight_matrix(const DistanceMatrix& d, const WeightFamily& family);

/// Human-readable form, e.g. "tanh(a=10,theta=0.5)".
std::string describe(const WeightFamily& family);

}  // namespace geostress
