#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace nplab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

/// Immutable simple undirected graph on the vertices 0..n-1.
///
/// Every vertex keeps both a sorted neighbor list (for iteration) and a
/// bitset row (for constant-time membership). Graphs with at most 64
/// vertices additionally carry one machine word per vertex, which the
/// exhaustive searches use directly.
class Graph {
 public:
  static constexpr std::size_t kWordOrder = 64;

  /// Edgeless graph of the given order (order >= 1).
  explicit Graph(std::size_t order);

  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  Graph(std::size_t order, std::span<const Edge> edges);
  Graph(std::size_t order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return neighbors_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t min_degree() const noexcept { return min_degree_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return rows_[v]; }

  /// Neighborhood of v as a 64-bit mask; only valid when order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const;
  bool has_word_rows() const noexcept { return !masks_.empty(); }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_regular(std::size_t d) const noexcept {
    return min_degree_ == d && max_degree_ == d;
  }

  /// Connected components, each sorted ascending, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  bool is_connected() const { return components().size() == 1; }
  bool is_bipartite() const;

  Graph with_edge(Vertex u, Vertex v) const;

  /// Subgraph induced by `keep` (ascending); vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.neighbors_ == b.neighbors_;
  }

 private:
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<VertexSet> rows_;
  std::vector<std::uint64_t> masks_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
  std::size_t min_degree_ = 0;
};

}  // namespace nplab
