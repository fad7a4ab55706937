#pragma once

#include <optional>

#include "nplab/budget.hpp"
#include "nplab/cycle.hpp"
#include "nplab/graph.hpp"

namespace nplab {

/// Backtracking Hamilton cycle search. Extends a path from a minimum-degree
/// vertex, preferring the neighbor with the fewest unvisited neighbors, and
/// prunes on stranded vertices and on disconnection of the unvisited part.
/// Deterministic for a given graph.
SearchOutcome<HamiltonCycle> find_hamilton_cycle(const Graph& g, const SearchBudget& budget = {});

struct CycleMissingOne {
  HamiltonCycle cycle;  ///< spans every vertex except `missing`
  Vertex missing = 0;
};

/// Looks for a cycle through all vertices but one by running the Hamilton
/// search on g - x for x = 0, 1, ... in turn; all runs share the budget.
SearchOutcome<CycleMissingOne> find_cycle_missing_one(const Graph& g,
                                                      const SearchBudget& budget = {});

/// A chord of `c` closing a cycle whose length is divisible by 4, scanning
/// chords by (smaller endpoint, larger endpoint).
std::optional<Chord> find_chord_4k(const Graph& g, const HamiltonCycle& c);

/// A chord of `c` closing an odd cycle, scanning in the same order.
std::optional<Chord> find_odd_chord(const Graph& g, const HamiltonCycle& c);

}  // namespace nplab
