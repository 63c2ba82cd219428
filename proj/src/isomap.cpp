#include "geostress/isomap.hpp"

#include "geostress/error.hpp"
#include "geostress/linalg.hpp"
#include "geostress/parallel.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace geostress {

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::size_t, double>>>;

std::vector<double> dijkstra(const Adjacency& adj, std::size_t source) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(adj.size(), inf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    for (const auto& [v, len] : adj[u]) {
      const double alt = du + len;
      if (alt < dist[v]) {
        dist[v] = alt;
        heap.emplace(alt, v);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMatrix all_pairs_shortest_paths(const DistanceGraph& g, std::size_t jobs) {
  if (auto missing = first_unreachable(g)) throw DisconnectedGraphError(0, *missing);
  const auto adj = g.adjacency();
  const std::size_t n = g.n();
  std::vector<std::vector<double>> rows(n);
  parallel_for(n, jobs, [&](std::size_t s) { rows[s] = dijkstra(adj, s); });

  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(nn, nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // Paths found from either end agree up to summation order; take the
      // smaller so the result does not depend on which source ran.
      const double v = std::min(rows[i][j], rows[j][i]);
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  return DistanceMatrix(std::move(out));
}

IsomapEmbedding isomap_embed(const DistanceMatrix& d, double theta, std::size_t k, std::size_t jobs) {
  DistanceMatrix completed = all_pairs_shortest_paths(threshold_graph(d, theta), jobs);
  MdsEmbedding mds = classical_mds(completed, k);
  return {std::move(mds.x), std::move(completed)};
}

}  // namespace geostress
