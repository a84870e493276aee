// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace altgraph {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected graph in compressed sparse row layout. Neighbor
/// lists are sorted ascending, so edge lookup is a binary search and two
/// graphs on the same vertex numbering compare equal iff their edge sets do.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Takes ownership of CSR arrays; sorts each neighbor list. Throws
  /// InvalidArgument if offsets are malformed or a neighbor is out of range.
  /// Symmetry is not enforced here; see find_invariant_violation.
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> neighbors);

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);
  static Graph complete(std::size_t order);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  /// Common degree if every vertex has the same degree.
  std::optional<std::size_t> regular_degree() const noexcept;
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Canonical edge list: u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// First violated structural invariant (asymmetric adjacency, self-loop,
/// duplicate neighbor, unsorted list), or nullopt if the graph is a simple
/// undirected graph.
std::optional<std::string> find_invariant_violation(const Graph& g);

bool is_connected(const Graph& g);

/// Pairs source vertices with target vertices, position by position.
struct VertexMap {
  std::vector<Vertex> source;
  std::vector<Vertex> target;

  std::size_t size() const noexcept { return source.size(); }
};

bool is_injective(const VertexMap& map);

/// `first` followed by `second`: every target of `first` must be a source of
/// `second`.
VertexMap then(const VertexMap& first, const VertexMap& second);

/// True iff `map` is a bijection V(from) -> V(to) with u~v <=> map(u)~map(v).
bool is_isomorphism(const Graph& from, const Graph& to, const VertexMap& map);

/// Subgraph induced on `subset` (any order, duplicates rejected). The returned
/// map pairs each new index with its original vertex; new indices follow
/// ascending original order.
std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, std::span<const Vertex> subset);

}  // namespace altgraph
