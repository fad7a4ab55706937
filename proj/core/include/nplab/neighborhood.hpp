#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nplab/budget.hpp"
#include "nplab/certificate.hpp"
#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"

namespace nplab {

/// A member H of the neighborhood-graph family of a base graph G: for every
/// vertex v with deg(v) >= 2 exactly one pair {u, w} inside N(v) is chosen,
/// and H is the simple graph on V(G) formed by those pairs.
class NeighborhoodGraph {
 public:
  /// `chosen[v]` must be empty exactly when deg(v) < 2, and otherwise name
  /// two distinct neighbors of v. Throws PreconditionError on violation.
  NeighborhoodGraph(Graph base, std::vector<std::optional<Edge>> chosen);

  const Graph& base() const noexcept { return base_; }
  const Graph& graph() const noexcept { return h_; }
  std::span<const std::optional<Edge>> chosen() const noexcept { return chosen_; }

  /// The chosen pairs in vertex order, normalized so first < second.
  std::vector<Edge> chosen_edges() const;

 private:
  Graph base_;
  std::vector<std::optional<Edge>> chosen_;
  Graph h_;
};

/// Lazily walks every neighborhood graph of `g` (odometer order over the
/// per-vertex pair choices, lexicographic pairs, last vertex fastest).
class NeighborhoodGraphEnumerator {
 public:
  explicit NeighborhoodGraphEnumerator(const Graph& g);

  std::optional<NeighborhoodGraph> next();

  /// Number of members counted with multiplicity (product of C(deg, 2)),
  /// saturating at UINT64_MAX.
  std::uint64_t count() const noexcept { return count_; }

 private:
  Graph base_;
  std::vector<Vertex> branching_;          // vertices with deg >= 2
  std::vector<std::vector<Edge>> pairs_;   // per branching vertex
  std::vector<std::size_t> cursor_;
  std::uint64_t count_ = 1;
  bool done_ = false;
};

NeighborhoodGraphEnumerator neighborhood_graphs(const Graph& g);

/// The single neighborhood graph of a graph with maximum degree <= 2.
NeighborhoodGraph unique_neighborhood_graph(const Graph& g);

/// Lifts a prime labeling of H in N(G) to a neighborhood-prime labeling of G.
/// Throws PreconditionError if `h` was not built over `g` or `f` is not a
/// prime labeling of H.
Certificate lift_prime_to_npl(const Graph& g, const NeighborhoodGraph& h, const Labeling& f);

struct TwoRegularEquivalence {
  SearchStatus graph_npl_search = SearchStatus::Exhausted;
  SearchStatus neighborhood_prime_search = SearchStatus::Exhausted;
  bool graph_npl = false;           ///< G has a neighborhood-prime labeling
  bool neighborhood_prime = false;  ///< its unique H has a prime labeling

  bool decided() const noexcept {
    return graph_npl_search != SearchStatus::BudgetExhausted &&
           neighborhood_prime_search != SearchStatus::BudgetExhausted;
  }
  bool agree() const noexcept { return graph_npl == neighborhood_prime; }
};

/// Runs an exact neighborhood-prime search on a 2-regular graph and an exact
/// prime-labeling search on its unique neighborhood graph. The two answers
/// must coincide. Throws PreconditionError when g is not 2-regular.
TwoRegularEquivalence npl_iff_prime_2regular(const Graph& g, const SearchBudget& budget = {});

/// Not-NPL certificate for a 2-regular graph whose neighborhood graph is a
/// union of cycles containing at least two odd cycles; empty otherwise.
std::optional<Certificate> odd_cycle_union_obstruction(const Graph& g);

inline constexpr std::size_t kDefaultObstructionCap = 20;

/// Tries to place the floor(n/2) even labels on a vertex set that contains
/// no complete neighborhood of a vertex of degree >= 2. When no such set
/// exists the graph has no neighborhood-prime labeling and a not-NPL
/// certificate is returned; otherwise the result is empty (which proves
/// nothing). Throws BudgetError when order exceeds `max_order` (or 64) and
/// PreconditionError for order < 2.
std::optional<Certificate> even_set_obstruction(const Graph& g,
                                                std::size_t max_order = kDefaultObstructionCap);

}  // namespace nplab
