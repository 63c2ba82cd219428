#pragma once

#include "geostress/optimize.hpp"
#include "geostress/stress.hpp"
#include "geostress/weights.hpp"

#include <string>
#include <vector>

namespace geostress::cli {

/// constant | sammon | exp:B | power:Z | heaviside:T | tanh:A,T
WeightFamily parse_weight_family(const std::string& text);

/// squared | raw
StressKernel parse_kernel(const std::string& text);

/// isomap:T | mds | random   (random uses `seed`)
InitSpec parse_init(const std::string& text, std::uint64_t seed);

/// bfgs | bh (alias basin_hopping)
Method parse_method(const std::string& text);

/// Comma-separated reals, e.g. "1,0.5,0.25".
std::vector<double> parse_real_list(const std::string& text);

std::vector<Method> parse_method_list(const std::string& text);

}  // namespace geostress::cli
