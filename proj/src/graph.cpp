#include "geostress/graph.hpp"

#include "geostress/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace geostress {

DistanceGraph::DistanceGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.i == e.j) throw DomainError("self-loop at vertex " + std::to_string(e.i));
    if (e.i >= n_ || e.j >= n_) throw DomainError("edge endpoint out of range");
    if (!std::isfinite(e.length) || e.length < 0.0)
      throw DomainError("edge length must be finite and nonnegative");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i == b.i && a.j == b.j;
  });
  if (dup != edges_.end())
    throw DomainError("duplicate edge (" + std::to_string(dup->i) + "," + std::to_string(dup->j) + ")");
}

std::vector<std::vector<std::pair<std::size_t, double>>> DistanceGraph::adjacency() const {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.i].emplace_back(e.j, e.length);
    adj[e.j].emplace_back(e.i, e.length);
  }
  return adj;
}

DistanceGraph graph_from_weights(const WeightMatrix& w, const DistanceMatrix& d, double eps) {
  if (w.size() != d.size())
    throw DimensionError("weight matrix and distance matrix sizes differ");
  std::vector<Edge> edges;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w(i, j) > eps) edges.push_back({i, j, d(i, j)});
  return DistanceGraph(n, std::move(edges));
}

DistanceGraph threshold_graph(const DistanceMatrix& d, double theta) {
  std::vector<Edge> edges;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (d(i, j) <= theta) edges.push_back({i, j, d(i, j)});
  return DistanceGraph(n, std::move(edges));
}

std::vector<std::size_t> connected_components(const DistanceGraph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(g.n(), unset);
  const auto adj = g.adjacency();
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, len] : adj[u]) {
        if (label[v] == unset) {
          label[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return label;
}

std::optional<std::size_t> first_unreachable(const DistanceGraph& g) {
  const auto label = connected_components(g);
  for (std::size_t v = 0; v < label.size(); ++v)
    if (label[v] != 0) return v;
  return std::nullopt;
}

bool is_connected(const DistanceGraph& g) { return !first_unreachable(g).has_value(); }

}  // namespace geostress
