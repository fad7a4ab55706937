#include "nplab/construct.hpp"
#include "nplab/hamilton.hpp"
#include "nplab/neighborhood.hpp"
#include "nplab/search.hpp"

namespace nplab {
namespace {

std::size_t edge_count_bound(std::size_t n) { return n * ((n >= 6 ? n - 6 : 0) / 8) + n; }

/// Labels a Hamiltonian graph from its cycle; nullopt when n = 2 mod 4 and
/// no useful chord exists.
std::optional<Certificate> from_hamilton_cycle(const Graph& g, const HamiltonCycle& c) {
  if (g.order() % 4 != 2) return label_hamiltonian(g, c);
  if (auto ch = find_chord_4k(g, c)) return label_ham_chord_4k(g, c, *ch);
  if (auto ch = find_odd_chord(g, c)) return label_ham_odd_chord(g, c, *ch);
  return std::nullopt;
}

std::optional<Chord> chord_of(const Reason& r) {
  if (const auto* x = std::get_if<reason::Chord4k>(&r)) return x->chord;
  if (const auto* x = std::get_if<reason::OddChord>(&r)) return x->chord;
  return std::nullopt;
}

}  // namespace

Certificate certify_sufficient(const Graph& g, const CertifyOptions& options) {
  const std::size_t n = g.order();

  if (g.max_degree() <= 1) {
    return make_npl_certificate(g, Labeling::identity(n), reason::ExplicitFormula{"vacuous"});
  }
  if (n >= 3 && 2 * g.min_degree() >= n) {
    auto ham = find_hamilton_cycle(g, options.hamilton_budget);
    if (ham.found()) {
      if (auto cert = from_hamilton_cycle(g, *ham.value)) {
        cert->reason = reason::DiracBound{ham.value->order, chord_of(cert->reason)};
        return *cert;
      }
    }
  }

  if (n >= 6 && g.max_degree() >= large_degree_threshold(n)) return label_large_degree(g);

  // A single cycle is left to the even-set obstruction below.
  const bool two_regular = g.is_regular(2);
  if (two_regular && !g.is_connected()) {
    if (auto cert = odd_cycle_union_obstruction(g)) return *cert;
  }

  auto ham = find_hamilton_cycle(g, options.hamilton_budget);
  if (ham.found()) {
    if (auto cert = from_hamilton_cycle(g, *ham.value)) {
      const std::size_t bound = edge_count_bound(n);
      if (n % 4 == 2 && g.edge_count() > bound) {
        cert->reason = reason::EdgeCountBound{ham.value->order, chord_of(cert->reason), bound};
      }
      return *cert;
    }
  }

  if (n % 4 != 3 && n >= 4 && g.is_connected()) {
    auto near = find_cycle_missing_one(g, options.hamilton_budget);
    if (near.found()) return label_circumference(g, near.value->cycle, near.value->missing);
  }

  if (n <= options.obstruction_cap && n <= Graph::kWordOrder) {
    if (auto cert = even_set_obstruction(g, options.obstruction_cap)) return *cert;
  }
  if (two_regular) {
    if (auto cert = odd_cycle_union_obstruction(g)) return *cert;
  }

  if (options.allow_search) return search_npl(g, options.search_budget);
  return make_unknown_certificate(0);
}

}  // namespace nplab
