#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nplab/graph.hpp"

namespace nplab {

/// Ordered vertex sequence v_1..v_k of a cycle; v_k is adjacent to v_1.
/// A Hamilton cycle is one that visits every vertex of its host.
struct HamiltonCycle {
  std::vector<Vertex> order;

  std::size_t size() const noexcept { return order.size(); }
  friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;
};

/// An edge of the host between two cycle vertices that are not consecutive.
struct Chord {
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Lengths (vertex counts) of the two cycles a chord closes with the arcs
/// of the host cycle. They always sum to cycle length + 2.
struct ChordArcs {
  std::size_t forward = 0;   ///< via the arc from a forward to b
  std::size_t backward = 0;  ///< via the remaining arc
};

/// Distinct vertices, at least three of them, consecutive ones adjacent in
/// `g` including the wrap-around pair.
bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle);

bool is_hamilton_cycle(const Graph& g, const HamiltonCycle& c);

bool is_chord_of(const Graph& g, const HamiltonCycle& c, const Chord& ch);

/// Throws PreconditionError when an endpoint is not on the cycle.
ChordArcs chord_arcs(const HamiltonCycle& c, const Chord& ch);

}  // namespace nplab
