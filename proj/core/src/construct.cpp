#include "nplab/construct.hpp"

#include <algorithm>
#include <string>

#include "construct_detail.hpp"
#include "nplab/error.hpp"
#include "nplab/numtheory.hpp"

namespace nplab {

using detail::arrange;
using detail::complete_ascending;

std::vector<Label> standard_cycle_labels(std::size_t length) {
  std::vector<Label> labels(length);
  const std::size_t half = length / 2;
  for (std::size_t i = 1; i <= length; ++i) {
    labels[i - 1] = static_cast<Label>(i % 2 == 1 ? half + (i + 1) / 2 : i / 2);
  }
  return labels;
}

Labeling label_cycle_standard(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  return Labeling(standard_cycle_labels(n));
}

namespace {

std::vector<Label> labels_along(std::size_t order, std::span<const Vertex> seq) {
  std::vector<Label> out(order, 0);
  const auto labels = standard_cycle_labels(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[seq[i]] = labels[i];
  return out;
}

void require_hamilton(const Graph& g, const HamiltonCycle& c) {
  if (!is_hamilton_cycle(g, c)) throw PreconditionError("not a Hamilton cycle of the graph");
}

void require_chord(const Graph& g, const HamiltonCycle& c, const Chord& ch) {
  if (!is_chord_of(g, c, ch)) throw PreconditionError("not a chord of the cycle");
}

std::size_t position_in(std::span<const Vertex> seq, Vertex v) {
  return static_cast<std::size_t>(std::find(seq.begin(), seq.end(), v) - seq.begin());
}

}  // namespace

Certificate label_hamiltonian(const Graph& g, const HamiltonCycle& c) {
  require_hamilton(g, c);
  if (g.order() % 4 == 2) {
    throw PreconditionError("order is 2 mod 4; use a chord construction");
  }
  return make_npl_certificate(g, Labeling(labels_along(g.order(), c.order)),
                              reason::HamiltonianEq1{c.order});
}

Certificate label_ham_chord_4k(const Graph& g, const HamiltonCycle& c, const Chord& ch) {
  require_hamilton(g, c);
  require_chord(g, c, ch);
  const std::size_t n = g.order();
  if (n % 4 != 2) throw PreconditionError("chord construction needs order 2 mod 4");
  for (bool reversed : {false, true}) {
    for (std::size_t s = 0; s < n; ++s) {
      auto seq = arrange(c.order, reversed, s);
      const Vertex last = seq[n - 1];
      if (last != ch.a && last != ch.b) continue;
      const Vertex other = last == ch.a ? ch.b : ch.a;
      const std::size_t p = position_in(seq, other);  // v_{p+1}
      if (p % 4 != 2) continue;
      const std::size_t k = (p + 2) / 4;
      auto labels = labels_along(n, seq);
      return make_npl_certificate(g, Labeling(std::move(labels)),
                                  reason::Chord4k{std::move(seq), ch, k});
    }
  }
  throw PreconditionError("chord does not close a cycle of length divisible by 4");
}

Certificate label_ham_odd_chord(const Graph& g, const HamiltonCycle& c, const Chord& ch) {
  require_hamilton(g, c);
  require_chord(g, c, ch);
  const std::size_t n = g.order();
  if (n % 4 != 2) throw PreconditionError("odd-chord construction needs order 2 mod 4");
  for (bool reversed : {false, true}) {
    for (std::size_t s = 0; s < n; ++s) {
      auto seq = arrange(c.order, reversed, s);
      if (seq[0] != ch.a && seq[0] != ch.b) continue;
      const Vertex other = seq[0] == ch.a ? ch.b : ch.a;
      const std::size_t p = position_in(seq, other);
      if (p % 2 != 0) continue;
      const std::size_t k = p + 1;
      std::vector<Label> labels(n, 0);
      Label next = 1;
      for (std::size_t i = 0; i < n; i += 2) labels[seq[i]] = next++;
      for (std::size_t i = k; i < n; i += 2) labels[seq[i]] = next++;
      for (std::size_t i = 1; i + 1 < k; i += 2) labels[seq[i]] = next++;
      return make_npl_certificate(g, Labeling(std::move(labels)),
                                  reason::OddChord{std::move(seq), ch, k});
    }
  }
  throw PreconditionError("chord does not close an odd cycle");
}

Certificate label_circumference(const Graph& g, const HamiltonCycle& c, Vertex missing) {
  const std::size_t n = g.order();
  if (n % 4 == 3) throw PreconditionError("circumference construction needs order not 3 mod 4");
  if (missing >= n || c.size() + 1 != n ||
      std::find(c.order.begin(), c.order.end(), missing) != c.order.end() ||
      !is_cycle_in(g, c.order)) {
    throw PreconditionError("cycle must span every vertex except the missing one");
  }
  if (g.degree(missing) == 0) throw PreconditionError("missing vertex is isolated");
  for (std::size_t s = 0; s < c.size(); ++s) {
    auto seq = arrange(c.order, false, s);
    if (!g.adjacent(seq[1], missing)) continue;
    auto labels = labels_along(n, seq);
    labels[missing] = static_cast<Label>(n);
    return make_npl_certificate(g, Labeling(std::move(labels)),
                                reason::CircumferenceNMinus1{std::move(seq), missing});
  }
  throw InternalError("no rotation places a neighbor of the missing vertex second");
}

Certificate label_cycle_attachments(const Graph& g, const HamiltonCycle& c) {
  const std::size_t n = g.order();
  const std::size_t len = c.size();
  if (len % 4 == 2) throw PreconditionError("cycle length must not be 2 mod 4");
  if (!is_cycle_in(g, c.order)) throw PreconditionError("not a cycle of the graph");
  std::vector<std::size_t> pos(n, len);
  for (std::size_t i = 0; i < len; ++i) pos[c.order[i]] = i;
  std::vector<Vertex> extra;
  for (Vertex x = 0; x < n; ++x) {
    if (pos[x] < len) continue;
    bool ok = false;
    for (Vertex y : g.neighbors(x)) {
      if (pos[y] < len && g.adjacent(x, c.order[(pos[y] + 2) % len])) ok = true;
    }
    if (!ok) {
      throw PreconditionError("vertex " + std::to_string(x) +
                              " is not adjacent to two cycle vertices two apart");
    }
    extra.push_back(x);
  }
  for (bool reversed : {false, true}) {
    for (std::size_t s = 0; s < len; ++s) {
      auto seq = arrange(c.order, reversed, s);
      auto labels = labels_along(n, seq);
      Label next = static_cast<Label>(len + 1);
      for (Vertex x : extra) labels[x] = next++;
      Labeling f(std::move(labels));
      if (is_neighborhood_prime(g, f)) {
        return make_npl_certificate(g, std::move(f),
                                    reason::CycleAttachments{std::move(seq), extra});
      }
    }
  }
  throw PreconditionError("cycle does not carry a neighborhood-prime labeling of the graph");
}

std::size_t large_degree_threshold(std::size_t n) {
  return n + static_cast<std::size_t>(prime_pi(n / 2)) - static_cast<std::size_t>(prime_pi(n)) - 1;
}

Certificate label_large_degree(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6) throw PreconditionError("large-degree construction needs order >= 6");
  if (g.max_degree() < large_degree_threshold(n)) {
    throw PreconditionError("maximum degree below " + std::to_string(large_degree_threshold(n)));
  }
  Vertex center = 0;
  while (g.degree(center) != g.max_degree()) ++center;

  std::vector<std::uint64_t> big_primes;
  for (auto p : sieve_primes(n)) {
    if (2 * p > n) big_primes.push_back(p);
  }

  std::vector<Label> labels(n, 0);
  labels[center] = 1;
  std::size_t i = 0;
  std::size_t hits_near_center = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (u == center || g.adjacent(center, u)) continue;
    const std::size_t slot = i++;
    for (Vertex w : g.neighbors(u)) {
      if (labels[w] != 0) continue;
      labels[w] = static_cast<Label>(big_primes.at(slot));
      if (g.adjacent(center, w)) ++hits_near_center;
      break;
    }
  }
  const std::size_t small_needed = hits_near_center == 0 ? 2 : hits_near_center == 1 ? 1 : 0;
  Label small = 2;
  for (Vertex w : g.neighbors(center)) {
    if (small >= 2 + small_needed) break;
    if (labels[w] == 0) labels[w] = small++;
  }
  return make_npl_certificate(g, complete_ascending(std::move(labels)),
                              reason::LargeDegree{center});
}

FamilyLabeling extend_with_pendants(const Graph& g, const Certificate& cert,
                                    std::span<const std::pair<Vertex, std::size_t>> attachments) {
  if (!cert.is_npl() || !cert.labeling || cert.labeling->size() != g.order() ||
      !is_neighborhood_prime(g, *cert.labeling)) {
    throw PreconditionError("certificate is not a verified NPL of the graph");
  }
  if (attachments.empty()) return FamilyLabeling{g, cert};
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  auto next = static_cast<Vertex>(n);
  for (const auto& [host, count] : attachments) {
    if (host >= n || g.degree(host) <= 2) {
      throw PreconditionError("pendant host " + std::to_string(host) + " must have degree > 2");
    }
    for (std::size_t j = 0; j < count; ++j) edges.emplace_back(host, next++);
  }
  Graph extended(next, edges);
  std::vector<Label> labels(cert.labeling->values().begin(), cert.labeling->values().end());
  for (Vertex v = static_cast<Vertex>(n); v < next; ++v) labels.push_back(v + 1);
  auto certificate = make_npl_certificate(
      extended, Labeling(std::move(labels)),
      reason::ExplicitFormula{"pendants on " + std::string(cert.tag())});
  return FamilyLabeling{std::move(extended), std::move(certificate)};
}

}  // namespace nplab
