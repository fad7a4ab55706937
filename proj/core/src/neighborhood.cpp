#include "nplab/neighborhood.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "nplab/error.hpp"
#include "nplab/search.hpp"

namespace nplab {
namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

Graph build_h(std::size_t order, const std::vector<std::optional<Edge>>& chosen) {
  std::vector<Edge> edges;
  for (const auto& c : chosen) {
    if (c) edges.push_back(normalized(*c));
  }
  return Graph(order, edges);
}

std::vector<Edge> pairs_in(const Graph& g, Vertex v) {
  std::vector<Edge> out;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) out.emplace_back(nb[i], nb[j]);
  }
  return out;
}

}  // namespace

NeighborhoodGraph::NeighborhoodGraph(Graph base, std::vector<std::optional<Edge>> chosen)
    : base_(std::move(base)), chosen_(std::move(chosen)), h_(build_h(base_.order(), chosen_)) {
  if (chosen_.size() != base_.order()) {
    throw PreconditionError("neighborhood graph needs one choice slot per vertex");
  }
  for (Vertex v = 0; v < base_.order(); ++v) {
    const auto& c = chosen_[v];
    if (base_.degree(v) < 2) {
      if (c) throw PreconditionError("vertex " + std::to_string(v) + " has degree < 2 but a chosen pair");
      continue;
    }
    if (!c) throw PreconditionError("vertex " + std::to_string(v) + " is missing its chosen pair");
    if (c->first == c->second || !base_.adjacent(v, c->first) || !base_.adjacent(v, c->second)) {
      throw PreconditionError("chosen pair for vertex " + std::to_string(v) +
                              " does not lie inside its neighborhood");
    }
  }
}

std::vector<Edge> NeighborhoodGraph::chosen_edges() const {
  std::vector<Edge> out;
  for (const auto& c : chosen_) {
    if (c) out.push_back(normalized(*c));
  }
  return out;
}

NeighborhoodGraphEnumerator::NeighborhoodGraphEnumerator(const Graph& g) : base_(g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 2) continue;
    branching_.push_back(v);
    pairs_.push_back(pairs_in(g, v));
    const std::uint64_t choices = pairs_.back().size();
    if (count_ > std::numeric_limits<std::uint64_t>::max() / choices) {
      count_ = std::numeric_limits<std::uint64_t>::max();
    } else {
      count_ *= choices;
    }
  }
  cursor_.assign(branching_.size(), 0);
}

std::optional<NeighborhoodGraph> NeighborhoodGraphEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<std::optional<Edge>> chosen(base_.order());
  for (std::size_t i = 0; i < branching_.size(); ++i) {
    chosen[branching_[i]] = pairs_[i][cursor_[i]];
  }
  NeighborhoodGraph out(base_, std::move(chosen));

  std::size_t i = branching_.size();
  while (i > 0) {
    --i;
    if (++cursor_[i] < pairs_[i].size()) break;
    cursor_[i] = 0;
    if (i == 0) done_ = true;
  }
  if (branching_.empty()) done_ = true;
  return out;
}

NeighborhoodGraphEnumerator neighborhood_graphs(const Graph& g) {
  return NeighborhoodGraphEnumerator(g);
}

NeighborhoodGraph unique_neighborhood_graph(const Graph& g) {
  if (g.max_degree() > 2) {
    throw PreconditionError("unique neighborhood graph requires maximum degree <= 2");
  }
  auto it = neighborhood_graphs(g);
  return *it.next();
}

Certificate lift_prime_to_npl(const Graph& g, const NeighborhoodGraph& h, const Labeling& f) {
  if (!(h.base() == g)) {
    throw PreconditionError("neighborhood graph was built over a different graph");
  }
  const auto prime = is_prime_labeling(h.graph(), f);
  if (!prime) {
    throw PreconditionError("labeling is not prime on the neighborhood graph (edge " +
                            std::to_string(prime.failing_edge->first) + "," +
                            std::to_string(prime.failing_edge->second) + ")");
  }
  return make_npl_certificate(g, f, reason::NeighborhoodLift{h.chosen_edges()});
}

TwoRegularEquivalence npl_iff_prime_2regular(const Graph& g, const SearchBudget& budget) {
  if (!g.is_regular(2)) {
    throw PreconditionError("graph is not 2-regular");
  }
  const auto h = unique_neighborhood_graph(g);
  TwoRegularEquivalence out;
  const auto npl = search_npl_labeling(g, budget);
  out.graph_npl_search = npl.status;
  out.graph_npl = npl.found();
  const auto prime = search_prime_labeling(h.graph(), budget);
  out.neighborhood_prime_search = prime.status;
  out.neighborhood_prime = prime.found();
  return out;
}

std::optional<Certificate> odd_cycle_union_obstruction(const Graph& g) {
  if (!g.is_regular(2)) return std::nullopt;
  const auto h = unique_neighborhood_graph(g);
  std::vector<std::size_t> lengths;
  std::size_t odd = 0;
  for (const auto& comp : h.graph().components()) {
    lengths.push_back(comp.size());
    if (comp.size() % 2 == 1) ++odd;
  }
  if (odd < 2) return std::nullopt;
  std::sort(lengths.begin(), lengths.end());
  return make_not_npl_certificate(reason::OddCycleUnion{std::move(lengths)});
}

std::optional<Certificate> even_set_obstruction(const Graph& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("even-set obstruction needs order >= 2");
  if (n > max_order || n > Graph::kWordOrder) {
    throw BudgetError("even-set obstruction refused: order " + std::to_string(n) +
                      " exceeds cap " + std::to_string(std::min(max_order, Graph::kWordOrder)));
  }
  const std::size_t evens = n / 2;

  // watchers[i]: neighborhoods (of degree >= 2 vertices) that contain vertex i.
  std::vector<std::vector<std::uint64_t>> watchers(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) continue;
    const std::uint64_t nb = g.neighbor_mask(v);
    for (Vertex w : g.neighbors(v)) watchers[w].push_back(nb);
  }

  // Depth-first over include/exclude decisions for vertices 0..n-1.
  auto extend = [&](auto&& self, std::size_t i, std::uint64_t set, std::size_t size) -> bool {
    if (size == evens) return true;
    if (n - i < evens - size) return false;
    const std::uint64_t with = set | (std::uint64_t{1} << i);
    const bool covers = std::any_of(watchers[i].begin(), watchers[i].end(),
                                    [&](std::uint64_t nb) { return (nb & ~with) == 0; });
    if (!covers && self(self, i + 1, with, size + 1)) return true;
    return self(self, i + 1, set, size);
  };

  if (extend(extend, 0, 0, 0)) return std::nullopt;
  return make_not_npl_certificate(reason::EvenSetObstruction{evens});
}

}  // namespace nplab
