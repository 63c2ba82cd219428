#pragma once

#include "geostress/core.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace geostress {

struct Edge {
  std::size_t i;  // i < j
  std::size_t j;
  double length;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph on vertices 0..n-1 with weighted edges. Edges are stored
/// once, normalized to i < j and sorted lexicographically.
class DistanceGraph {
public:
  DistanceGraph() = default;
  /// Throws DomainError on self-loops, duplicate edges, out-of-range
  /// vertices, or negative/non-finite lengths.
  DistanceGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbour lists: (vertex, length) for each vertex.
  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency() const;

  friend bool operator==(const DistanceGraph&, const DistanceGraph&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Edge (i,j) iff w_ij > eps, with length d_ij.
DistanceGraph graph_from_weights(const WeightMatrix& w, const DistanceMatrix& d, double eps = 0.0);

/// Edge (i,j) iff d_ij <= theta.
DistanceGraph threshold_graph(const DistanceMatrix& d, double theta);

/// First vertex not reachable from vertex 0, if any.
std::optional<std::size_t> first_unreachable(const DistanceGraph& g);

bool is_connected(const DistanceGraph& g);

/// Connected component label for every vertex, labels in order of first
/// appearance.
std::vector<std::size_t> connected_components(const DistanceGraph& g);

}  // namespace geostress
