#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nplab/budget.hpp"
#include "nplab/certificate.hpp"
#include "nplab/cycle.hpp"
#include "nplab/generators.hpp"
#include "nplab/graph.hpp"
#include "nplab/labeling.hpp"
#include "nplab/neighborhood.hpp"

namespace nplab {

/// A generated family member together with its certificate.
struct FamilyLabeling {
  Graph graph;
  Certificate certificate;
};

/// The standard alternating labels along a sequence of `length` positions:
/// position i (1-based) gets floor(length/2) + (i+1)/2 when i is odd and
/// i/2 when i is even.
std::vector<Label> standard_cycle_labels(std::size_t length);

/// Standard labels on gen_cycle(n). An NPL exactly when n % 4 != 2.
Labeling label_cycle_standard(std::size_t n);

/// Standard labels along `c`, which must be a Hamilton cycle of `g`.
/// Throws PreconditionError when n % 4 == 2 (use a chord variant instead).
Certificate label_hamiltonian(const Graph& g, const HamiltonCycle& c);

/// n % 4 == 2 and `ch` closes a cycle whose length is a multiple of 4.
/// The cycle is rotated (and if needed reversed) so the chord joins
/// positions n and 4k-1; the first such arrangement in (forward before
/// reversed, smallest starting offset) order is used.
Certificate label_ham_chord_4k(const Graph& g, const HamiltonCycle& c, const Chord& ch);

/// n % 4 == 2 and `ch` closes an odd cycle. The cycle is arranged so the
/// chord is v_1 v_k with (v_1, ..., v_k) odd; labels 1..n/2 go to
/// v_1, v_3, ..., v_{n-1} and n/2+1..n to v_{k+1}, v_{k+3}, ..., v_n,
/// v_2, ..., v_{k-1}.
Certificate label_ham_odd_chord(const Graph& g, const HamiltonCycle& c, const Chord& ch);

/// `c` spans every vertex except `missing`, n % 4 != 3, and `missing` has a
/// neighbor. The cycle is rotated so a neighbor of `missing` is second; it
/// gets the standard labels and `missing` gets n.
Certificate label_circumference(const Graph& g, const HamiltonCycle& c, Vertex missing);

/// `c` is a Hamilton cycle of g minus the extra vertices; every extra vertex
/// is adjacent to two cycle vertices two steps apart (indices mod |c|).
/// Cycle vertices get the standard labels in the first rotation that works
/// and the extra vertices get |c|+1, |c|+2, ... by ascending index.
Certificate label_cycle_attachments(const Graph& g, const HamiltonCycle& c);

/// GP(n, k) with vertex layout as in gen_generalized_petersen. The explicit
/// four-formula labeling for n % 4 == 0, n >= 8, k = n/2; a Hamilton cycle
/// (plus an odd chord when n is odd) otherwise; exact search for the
/// non-Hamiltonian n % 6 == 5, k in {2, (n-1)/2} graphs or when the Hamilton
/// search is inconclusive. Unknown verdict if the budget runs out.
FamilyLabeling label_gp(std::size_t n, std::size_t k, const SearchBudget& budget = {});

/// The m x n grid (row-major). Dispatches on m*n mod 4; 1 x n grids are
/// paths and get the standard labels along the path.
FamilyLabeling label_grid(std::size_t m, std::size_t n);

/// The l x m x n grid for l*m*n % 4 == 0 and all sides >= 2: a Hamilton
/// cycle layered along an even side, then the standard labels.
FamilyLabeling label_grid3(std::size_t l, std::size_t m, std::size_t n);

/// Degree threshold n - pi(n) + pi(floor(n/2)) - 1.
std::size_t large_degree_threshold(std::size_t n);

/// For n >= 6 and max degree at least large_degree_threshold(n). The
/// smallest-index vertex of maximum degree is the center and gets 1; each
/// non-neighbor's smallest unlabeled neighbor receives one of the primes in
/// (n/2, n]; 2 and 3 go to neighbors of the center as needed; the rest are
/// assigned ascending.
Certificate label_large_degree(const Graph& g);

struct StarUnionLabeling {
  Graph graph;                 ///< gen_union of gen_star(size) parts
  Labeling labeling;           ///< a prime labeling of graph
  std::vector<Vertex> centers; ///< center vertex of each star, in input order
};

/// Prime labeling of a union of stars with leaf counts `sizes`, at most one
/// of them above 15. A star above 15 takes 1 at the center and 2..s+1 on
/// its leaves; the others take the next block of consecutive labels with
/// the center chosen by pillai_select.
StarUnionLabeling label_union_of_stars(std::span<const std::size_t> sizes);

/// Reduced lobster whose interior spine degrees lie in [3, 16] except for at
/// most one larger. Labels come from a prime labeling of a union-of-stars
/// neighborhood graph, lifted to the lobster.
FamilyLabeling label_reduced_lobster(const LobsterSpec& spec);

/// Lobster labeling driven by coprime bijections. The spine is extended
/// until both ends are leaves; the construction applies when
///   sum over spine and middle vertices of (deg - 2) + 2
///     >= sum over spine vertices of (d' - d'_i),
/// where d'_i counts non-leaf neighbors of spine vertex i off the spine and
/// d' is their maximum. Throws PreconditionError otherwise. A labeling that
/// does not verify falls back to exact search under `budget`.
FamilyLabeling label_lobster_surplus(const LobsterSpec& spec, const SearchBudget& budget = {});

/// True when the lobster meets the inequality above (after spine extension).
bool lobster_surplus_applies(const LobsterSpec& spec);

/// Appends `count` pendant vertices to each host (in the given order); new
/// vertex n + j gets label n + j + 1. Hosts must have degree > 2 and `cert`
/// must be an NPL certificate for `g`.
FamilyLabeling extend_with_pendants(const Graph& g, const Certificate& cert,
                                    std::span<const std::pair<Vertex, std::size_t>> attachments);

struct CertifyOptions {
  SearchBudget search_budget;                            ///< exact search fallback
  SearchBudget hamilton_budget = SearchBudget::nodes(1'000'000);
  std::size_t obstruction_cap = kDefaultObstructionCap;
  bool allow_search = true;
};

/// Tries certificates from cheapest to most expensive: trivial (max degree
/// <= 1), minimum degree >= n/2, large degree, odd-cycle union (disconnected
/// 2-regular), Hamilton cycle with the chord rules and the edge-count bound,
/// a cycle missing one vertex, the even-set obstruction, odd-cycle union for
/// the remaining 2-regular graphs, and finally exact search.
/// Returns an Unknown verdict when nothing is conclusive.
Certificate certify_sufficient(const Graph& g, const CertifyOptions& options = {});

}  // namespace nplab
