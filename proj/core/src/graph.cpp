#include "nplab/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "nplab/error.hpp"

namespace nplab {

Graph::Graph(std::size_t order) : Graph(order, std::span<const Edge>{}) {}

Graph::Graph(std::size_t order, std::span<const Edge> edges) {
  if (order == 0) {
    throw PreconditionError("graph order must be at least 1");
  }
  rows_.assign(order, VertexSet(order));
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for order " + std::to_string(order));
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    rows_[u].set(v);
    rows_[v].set(u);
  }

  neighbors_.resize(order);
  std::size_t degree_sum = 0;
  min_degree_ = order;
  for (std::size_t v = 0; v < order; ++v) {
    auto& list = neighbors_[v];
    list.reserve(rows_[v].count());
    for (auto w = rows_[v].find_first(); w != VertexSet::npos; w = rows_[v].find_next(w)) {
      list.push_back(static_cast<Vertex>(w));
    }
    degree_sum += list.size();
    max_degree_ = std::max(max_degree_, list.size());
    min_degree_ = std::min(min_degree_, list.size());
  }
  edge_count_ = degree_sum / 2;

  if (order <= kWordOrder) {
    masks_.assign(order, 0);
    for (std::size_t v = 0; v < order; ++v) {
      for (Vertex w : neighbors_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (masks_.empty()) {
    throw PreconditionError("neighbor_mask requires order <= 64");
  }
  return masks_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(order(), 0);
  for (Vertex s = 0; s < order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : neighbors_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(order(), -1);
  for (Vertex s = 0; s < order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : neighbors_[v]) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto list = edges();
  list.emplace_back(u, v);
  return Graph(order(), list);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> index(order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> list;
  for (const auto& [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      list.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  return Graph(keep.size(), list);
}

}  // namespace nplab
