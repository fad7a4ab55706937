#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nplab/graph.hpp"

namespace nplab {

/// C_n on 0..n-1 in cyclic order (n >= 3).
Graph gen_cycle(std::size_t n);

/// P_n on 0..n-1 in path order (n >= 1).
Graph gen_path(std::size_t n);

/// K_{1,leaves}: center 0, leaves 1..leaves.
Graph gen_star(std::size_t leaves);

Graph gen_complete(std::size_t n);

/// Hub 0 joined to a rim cycle 1..rim (rim >= 3).
Graph gen_wheel(std::size_t rim);

/// Disjoint union; part i occupies the index range following parts 0..i-1.
Graph gen_union(std::span<const Graph> parts);

/// GP(n, k): outer vertices u_i = i, inner vertices v_i = n + i, with edges
/// u_i u_{i+1}, u_i v_i and v_i v_{i+k} (indices mod n). Requires n >= 3 and
/// 1 <= k < n/2, or k = n/2 for even n (inner vertices then have degree 2).
Graph gen_generalized_petersen(std::size_t n, std::size_t k);

/// Cartesian product of paths with the given side lengths. A coordinate
/// tuple (c_0, ..., c_{d-1}) has row-major index
/// ((c_0 * dims[1] + c_1) * dims[2] + c_2) ...; more than three dimensions
/// are accepted.
Graph gen_grid(std::span<const std::size_t> dims);
Graph gen_grid(std::initializer_list<std::size_t> dims);

/// Row-major index of a grid coordinate.
Vertex grid_index(std::span<const std::size_t> dims, std::span<const std::size_t> coord);

/// A lobster given by its spine and, per spine vertex, the non-spine
/// neighbors hanging off it. Each attachment is recorded by its number of
/// leaves: 0 is a pendant, k >= 1 is a "middle" vertex of degree k + 1.
struct LobsterSpec {
  std::vector<std::vector<std::size_t>> attachments;

  std::size_t spine_length() const noexcept { return attachments.size(); }
  std::size_t spine_degree(std::size_t i) const;
  /// Number of non-pendant attachments of spine vertex i.
  std::size_t middle_count(std::size_t i) const;
  std::size_t order() const;

  /// Ends of the spine bare; every attachment a middle with exactly one leaf.
  bool is_reduced() const;

  /// Reduced lobster whose interior spine vertices have the given degrees
  /// (each >= 2); the spine gets one extra bare vertex at each end.
  static LobsterSpec reduced(std::span<const std::size_t> interior_degrees);
  static LobsterSpec reduced(std::initializer_list<std::size_t> interior_degrees);
};

/// Layout: spine vertices 0..s-1 first; then, per spine vertex in order and
/// per attachment in order, the attachment vertex followed by its leaves.
Graph gen_lobster(const LobsterSpec& spec);

}  // namespace nplab
