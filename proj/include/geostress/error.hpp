#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

namespace geostress {

/// Invalid argument shapes or sizes (mismatched n, k out of range, ...).
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a domain invariant (asymmetric matrix, negative distance,
/// weight function evaluated outside its domain, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A graph required to be connected is not. Carries one pair of vertices
/// that cannot reach each other.
class DisconnectedGraphError : public std::runtime_error {
public:
  DisconnectedGraphError(std::size_t from, std::size_t to)
      : std::runtime_error("the graph of partial distances is not connected: vertex " +
                           std::to_string(to) + " is unreachable from vertex " +
                           std::to_string(from)),
        from_(from), to_(to) {}

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

private:
  std::size_t from_;
  std::size_t to_;
};

/// The objective or its gradient became non-finite and could not be
/// recovered by backtracking.
class NonFiniteError : public std::runtime_error {
public:
  NonFiniteError(const std::string& what, std::vector<double> last_good)
      : std::runtime_error(what), last_good_(std::move(last_good)) {}

  const std::vector<double>& last_good() const noexcept { return last_good_; }

private:
  std::vector<double> last_good_;
};

/// Failure while building the starting point of a solve (as opposed to a
/// failure of the optimizer itself). When the cause is a disconnected
/// neighbourhood graph, the unreachable pair is kept.
class InitializerError : public std::runtime_error {
public:
  explicit InitializerError(const std::string& what) : std::runtime_error(what) {}
  explicit InitializerError(const DisconnectedGraphError& cause)
      : std::runtime_error(std::string("initializer failed: ") + cause.what()),
        unreachable_(std::pair(cause.from(), cause.to())) {}

  const std::optional<std::pair<std::size_t, std::size_t>>& unreachable() const noexcept {
    return unreachable_;
  }

private:
  std::optional<std::pair<std::size_t, std::size_t>> unreachable_;
};

}  // namespace geostress
