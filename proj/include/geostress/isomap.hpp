#pragma once

#include "geostress/core.hpp"
#include "geostress/graph.hpp"

#include <cstddef>

namespace geostress {

/// Shortest-path (geodesic) distances by one Dijkstra run per source.
/// Throws DisconnectedGraphError naming an unreachable pair.
DistanceMatrix all_pairs_shortest_paths(const DistanceGraph& g, std::size_t jobs = 1);

struct IsomapEmbedding {
  PointCloud x;
  DistanceMatrix completed;
};

/// Classical MDS on the geodesic completion of the threshold graph
/// {(i,j) : d_ij <= theta}.
IsomapEmbedding isomap_embed(const DistanceMatrix& d, double theta, std::size_t k,
                             std::size_t jobs = 1);

}  // namespace geostress
