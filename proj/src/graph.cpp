// SPDX-License-Identifier: Apache-2.0
#include "altgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "altgraph/error.hpp"

namespace altgraph {

Graph::Graph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)) {
  if (offsets_.empty() || offsets_.front() != 0 || offsets_.back() != neighbors_.size() ||
      !std::is_sorted(offsets_.begin(), offsets_.end()))
    throw InvalidArgument("malformed CSR offsets");
  const std::size_t n = order();
  for (Vertex x : neighbors_)
    if (x >= n) throw InvalidArgument("neighbor index out of range");
  for (std::size_t v = 0; v < n; ++v)
    std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  std::vector<std::size_t> offsets(order + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) throw InvalidArgument("edge endpoint out of range");
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t v = 0; v < order; ++v) offsets[v + 1] += offsets[v];
  std::vector<Vertex> neighbors(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    neighbors[fill[e.u]++] = e.v;
    neighbors[fill[e.v]++] = e.u;
  }
  return Graph(std::move(offsets), std::move(neighbors));
}

Graph Graph::complete(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v) edges.push_back({u, v});
  return from_edges(order, edges);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < order(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::optional<std::size_t> Graph::regular_degree() const noexcept {
  if (order() == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (std::size_t v = 1; v < order(); ++v)
    if (degree(static_cast<Vertex>(v)) != d) return std::nullopt;
  return d;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= order() || v >= order()) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::optional<std::string> find_invariant_violation(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (nb[k] == u) return "self-loop at vertex " + std::to_string(u);
      if (k > 0 && nb[k - 1] >= nb[k])
        return "neighbor list of vertex " + std::to_string(u) + " not strictly ascending";
      if (!g.has_edge(nb[k], u))
        return "edge " + std::to_string(u) + "->" + std::to_string(nb[k]) + " has no reverse";
    }
  }
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(g.order(), false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      ++reached;
      frontier.push(v);
    }
  }
  return reached == g.order();
}

bool is_injective(const VertexMap& map) {
  if (map.source.size() != map.target.size()) return false;
  auto s = map.source;
  auto t = map.target;
  std::sort(s.begin(), s.end());
  std::sort(t.begin(), t.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end() &&
         std::adjacent_find(t.begin(), t.end()) == t.end();
}

VertexMap then(const VertexMap& first, const VertexMap& second) {
  std::unordered_map<Vertex, Vertex> lookup;
  lookup.reserve(second.size());
  for (std::size_t k = 0; k < second.size(); ++k) lookup.emplace(second.source[k], second.target[k]);
  VertexMap out;
  out.source = first.source;
  out.target.reserve(first.size());
  for (Vertex mid : first.target) {
    const auto it = lookup.find(mid);
    if (it == lookup.end())
      throw InvalidArgument("vertex " + std::to_string(mid) + " missing from second map");
    out.target.push_back(it->second);
  }
  return out;
}

bool is_isomorphism(const Graph& from, const Graph& to, const VertexMap& map) {
  const std::size_t n = from.order();
  if (to.order() != n || map.size() != n || map.target.size() != n) return false;
  if (from.edge_count() != to.edge_count()) return false;
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> image(n, kUnset);
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex s = map.source[k];
    const Vertex t = map.target[k];
    if (s >= n || t >= n || image[s] != kUnset || hit[t]) return false;
    image[s] = t;
    hit[t] = true;
  }
  // Bijective and edge counts agree, so preserving edges forward suffices.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : from.neighbors(u))
      if (u < v && !to.has_edge(image[u], image[v])) return false;
  return true;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw InvalidArgument("induced_subgraph needs a nonempty subset");
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgument("induced_subgraph subset has duplicates");
  if (sorted.back() >= g.order()) throw RangeError("induced_subgraph vertex out of range");

  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.order(), kAbsent);
  for (std::size_t k = 0; k < sorted.size(); ++k) local[sorted[k]] = static_cast<Vertex>(k);

  std::vector<std::size_t> offsets{0};
  std::vector<Vertex> neighbors;
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u))
      if (local[v] != kAbsent) neighbors.push_back(local[v]);
    offsets.push_back(neighbors.size());
  }
  VertexMap map;
  map.source.resize(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) map.source[k] = static_cast<Vertex>(k);
  map.target = std::move(sorted);
  return {Graph(std::move(offsets), std::move(neighbors)), std::move(map)};
}

}  // namespace altgraph
