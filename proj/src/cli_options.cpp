#include "geostress/cli_options.hpp"

#include "geostress/error.hpp"

#include <charconv>
#include <string_view>

namespace geostress::cli {

namespace {

double parse_real(std::string_view s, const std::string& context) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("cannot parse number '" + std::string(s) + "' in '" + context + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = s.find(sep);
    parts.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

// Splits "name:args" into its two halves; args is empty when there is no colon.
std::pair<std::string_view, std::string_view> name_and_args(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::vector<double> numeric_args(std::string_view args, std::size_t expected,
                                 const std::string& context) {
  std::vector<double> out;
  if (!args.empty())
    for (auto part : split(args, ',')) out.push_back(parse_real(part, context));
  if (out.size() != expected)
    throw DomainError("'" + context + "' expects " + std::to_string(expected) + " parameter(s)");
  return out;
}

}  // namespace

WeightFamily parse_weight_family(const std::string& text) {
  const auto [name, args] = name_and_args(text);
  WeightFamily family;
  if (name == "constant") {
    numeric_args(args, 0, text);
    family = weight::Constant{};
  } else if (name == "sammon") {
    numeric_args(args, 0, text);
    family = weight::SammonInverse{};
  } else if (name == "exp") {
    family = weight::ExpDecay{numeric_args(args, 1, text)[0]};
  } else if (name == "power") {
    family = weight::PowerDecay{numeric_args(args, 1, text)[0]};
  } else if (name == "heaviside") {
    family = weight::Heaviside{numeric_args(args, 1, text)[0]};
  } else if (name == "tanh") {
    const auto v = numeric_args(args, 2, text);
    family = weight::TanhSigmoid{v[0], v[1]};
  } else {
    throw DomainError("unknown weight family '" + text +
                      "' (expected constant, sammon, exp:B, power:Z, heaviside:T or tanh:A,T)");
  }
  validate(family);
  return family;
}

StressKernel parse_kernel(const std::string& text) {
  if (text == "squared") return StressKernel::SquaredDifferences;
  if (text == "raw") return StressKernel::RawDifferences;
  throw DomainError("unknown kernel '" + text + "' (expected squared or raw)");
}

InitSpec parse_init(const std::string& text, std::uint64_t seed) {
  const auto [name, args] = name_and_args(text);
  if (name == "isomap") {
    const double theta = numeric_args(args, 1, text)[0];
    if (!(theta > 0.0)) throw DomainError("isomap threshold must be > 0");
    return init::Isomap{theta};
  }
  if (name == "mds" && args.empty()) return init::ClassicalMds{};
  if (name == "random" && args.empty()) return init::Random{seed};
  throw DomainError("unknown initializer '" + text + "' (expected isomap:T, mds or random)");
}

Method parse_method(const std::string& text) {
  if (text == "bfgs") return Method::Bfgs;
  if (text == "bh" || text == "basin_hopping") return Method::BasinHopping;
  throw DomainError("unknown method '" + text + "' (expected bfgs or bh)");
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part, text));
  return out;
}

std::vector<Method> parse_method_list(const std::string& text) {
  std::vector<Method> out;
  for (auto part : split(text, ',')) out.push_back(parse_method(std::string(part)));
  return out;
}

}  // namespace geostress::cli
