#pragma once

#include "nplab/budget.hpp"
#include "nplab/certificate.hpp"
#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"

namespace nplab {

struct NplSearchOptions {
  /// Skip placements that are images of earlier ones under simple
  /// automorphisms: interchangeable twin vertices at every level, and
  /// vertex orbits for label 1. Off by default.
  bool symmetry_breaking = false;
};

/// Exact neighborhood-prime search. Labels 1, 2, ..., n are placed in turn;
/// each label tries the unlabeled vertices by descending degree. A branch
/// dies as soon as a vertex of degree >= 2 has its whole neighborhood
/// labeled with gcd > 1, or when fewer vertices can still take a multiple
/// of 2 (or 3) than there are such labels left to place.
SearchOutcome<Labeling> search_npl_labeling(const Graph& g, const SearchBudget& budget = {},
                                            const NplSearchOptions& options = {});

/// Same search wrapped as a certificate: SearchFound, SearchExhausted, or an
/// Unknown verdict when the budget ran out.
Certificate search_npl(const Graph& g, const SearchBudget& budget = {},
                       const NplSearchOptions& options = {});

/// Exact prime-labeling search with the same label-by-label scheme.
SearchOutcome<Labeling> search_prime_labeling(const Graph& g, const SearchBudget& budget = {});

/// Orbits of the automorphism group on vertices, each orbit reported as its
/// smallest member per vertex. Empty when the automorphism search ran out of
/// budget.
std::vector<Vertex> vertex_orbit_representatives(const Graph& g, const SearchBudget& budget = {});

}  // namespace nplab
