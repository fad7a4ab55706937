#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

#include "construct_detail.hpp"
#include "nplab/construct.hpp"
#include "nplab/error.hpp"
#include "nplab/neighborhood.hpp"
#include "nplab/numtheory.hpp"
#include "nplab/search.hpp"

namespace nplab {
namespace {

constexpr std::size_t kPillaiSpan = 15;

struct StarBlock {
  Label center = 0;
  std::vector<Label> leaves;
};

/// Label blocks for stars with the given leaf counts, in input order.
std::vector<StarBlock> star_blocks(std::span<const std::size_t> sizes) {
  if (sizes.empty()) throw PreconditionError("union of stars needs at least one star");
  std::size_t big = sizes.size();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] <= kPillaiSpan) continue;
    if (big != sizes.size()) throw PreconditionError("more than one star has over 15 leaves");
    big = i;
  }
  std::vector<StarBlock> blocks(sizes.size());
  Label next = 1;
  if (big != sizes.size()) {
    blocks[big].center = next++;
    for (std::size_t j = 0; j < sizes[big]; ++j) blocks[big].leaves.push_back(next++);
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i == big) continue;
    const Interval iv{next, sizes[i] + 1};
    const auto center = pillai_select(iv);
    if (!center) throw InternalError("no coprime center in a block of at most 16 labels");
    blocks[i].center = static_cast<Label>(*center);
    for (auto x = iv.start; x <= iv.last(); ++x) {
      if (x != *center) blocks[i].leaves.push_back(static_cast<Label>(x));
    }
    next = static_cast<Label>(iv.last() + 1);
  }
  return blocks;
}

/// Tree structure of a lobster once its spine has been extended so both
/// ends are leaves.
struct LobsterLayout {
  Graph graph;
  std::vector<Vertex> spine;
  std::vector<std::vector<Vertex>> middles;   // per spine position
  std::vector<std::vector<Vertex>> pendants;  // per spine position
};

LobsterLayout layout_lobster(const LobsterSpec& spec) {
  LobsterLayout out{gen_lobster(spec), {}, {}, {}};
  const Graph& g = out.graph;
  std::deque<Vertex> spine;
  for (std::size_t i = 0; i < spec.spine_length(); ++i) spine.push_back(static_cast<Vertex>(i));
  std::vector<bool> on_spine(g.order(), false);
  for (Vertex v : spine) on_spine[v] = true;
  auto extension = [&](Vertex end) -> std::optional<Vertex> {
    if (g.order() == 1 || g.degree(end) <= 1) return std::nullopt;
    for (Vertex w : g.neighbors(end)) {
      if (!on_spine[w]) return w;
    }
    return std::nullopt;
  };
  while (auto w = extension(spine.front())) {
    spine.push_front(*w);
    on_spine[*w] = true;
  }
  while (auto w = extension(spine.back())) {
    spine.push_back(*w);
    on_spine[*w] = true;
  }
  out.spine.assign(spine.begin(), spine.end());
  out.middles.resize(spine.size());
  out.pendants.resize(spine.size());
  for (std::size_t i = 0; i < spine.size(); ++i) {
    for (Vertex w : g.neighbors(spine[i])) {
      if (on_spine[w]) continue;
      (g.degree(w) >= 2 ? out.middles[i] : out.pendants[i]).push_back(w);
    }
  }
  return out;
}

struct SurplusBalance {
  std::int64_t available = 0;  // sum of (deg - 2) over spine and middles, plus 2
  std::int64_t required = 0;   // sum of (d' - d'_i)
  std::size_t rounds = 0;      // d'
};

SurplusBalance surplus_balance(const LobsterLayout& lay) {
  SurplusBalance b;
  for (const auto& m : lay.middles) b.rounds = std::max(b.rounds, m.size());
  b.available = 2;
  for (std::size_t i = 0; i < lay.spine.size(); ++i) {
    b.available += static_cast<std::int64_t>(lay.graph.degree(lay.spine[i])) - 2;
    for (Vertex u : lay.middles[i]) {
      b.available += static_cast<std::int64_t>(lay.graph.degree(u)) - 2;
    }
    b.required += static_cast<std::int64_t>(b.rounds - lay.middles[i].size());
  }
  return b;
}

}  // namespace

StarUnionLabeling label_union_of_stars(std::span<const std::size_t> sizes) {
  const auto blocks = star_blocks(sizes);
  std::vector<Graph> parts;
  for (auto s : sizes) parts.push_back(gen_star(s));
  Graph g = gen_union(parts);
  std::vector<Label> labels(g.order(), 0);
  std::vector<Vertex> centers;
  Vertex offset = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    centers.push_back(offset);
    labels[offset] = blocks[i].center;
    for (std::size_t j = 0; j < sizes[i]; ++j) labels[offset + 1 + j] = blocks[i].leaves[j];
    offset += static_cast<Vertex>(sizes[i] + 1);
  }
  Labeling f(std::move(labels));
  if (!is_prime_labeling(g, f)) throw InternalError("union-of-stars labeling is not prime");
  return StarUnionLabeling{std::move(g), std::move(f), std::move(centers)};
}

FamilyLabeling label_reduced_lobster(const LobsterSpec& spec) {
  if (!spec.is_reduced()) throw PreconditionError("lobster is not reduced");
  const std::size_t s = spec.spine_length();
  if (s < 3) throw PreconditionError("reduced lobster needs an interior spine vertex");
  std::size_t oversized = 0;
  for (std::size_t i = 1; i + 1 < s; ++i) {
    const std::size_t d = spec.spine_degree(i);
    if (d < 3) throw PreconditionError("interior spine degree below 3 at position " + std::to_string(i));
    if (d > 16) ++oversized;
  }
  if (oversized > 1) throw PreconditionError("more than one interior spine degree exceeds 16");

  Graph g = gen_lobster(spec);
  // middle[i][j] is u_{i,j}; its leaf w_{i,j} is middle[i][j] + 1.
  std::vector<std::vector<Vertex>> middle(s);
  Vertex next = static_cast<Vertex>(s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < spec.attachments[i].size(); ++j) {
      middle[i].push_back(next);
      next += 2;
    }
  }

  std::vector<std::optional<Edge>> chosen(g.order());
  for (std::size_t i = 1; i + 1 < s; ++i) {
    chosen[i] = Edge{middle[i][0], static_cast<Vertex>(i + 1)};
    for (Vertex u : middle[i]) chosen[u] = Edge{u + 1, static_cast<Vertex>(i)};
  }
  NeighborhoodGraph h(g, std::move(chosen));

  // Stars of H: center v_i for i = 2..n, in spine order.
  std::vector<Vertex> star_center;
  std::vector<std::vector<Vertex>> star_leaves;
  for (std::size_t i = 1; i < s; ++i) {
    std::vector<Vertex> leaves;
    for (Vertex u : middle[i]) leaves.push_back(u + 1);
    if (i >= 2) leaves.push_back(middle[i - 1][0]);
    star_center.push_back(static_cast<Vertex>(i));
    star_leaves.push_back(std::move(leaves));
  }
  std::vector<std::size_t> sizes;
  for (const auto& l : star_leaves) sizes.push_back(l.size());
  const auto blocks = star_blocks(sizes);

  std::vector<Label> labels(g.order(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    labels[star_center[b]] = blocks[b].center;
    for (std::size_t j = 0; j < star_leaves[b].size(); ++j) {
      labels[star_leaves[b][j]] = blocks[b].leaves[j];
    }
  }
  Labeling f = detail::complete_ascending(std::move(labels));
  auto cert = lift_prime_to_npl(g, h, f);
  return FamilyLabeling{std::move(g), std::move(cert)};
}

bool lobster_surplus_applies(const LobsterSpec& spec) {
  const auto b = surplus_balance(layout_lobster(spec));
  return b.available >= b.required;
}

FamilyLabeling label_lobster_surplus(const LobsterSpec& spec, const SearchBudget& budget) {
  auto lay = layout_lobster(spec);
  const auto balance = surplus_balance(lay);
  if (balance.available < balance.required) {
    throw PreconditionError("surplus inequality fails: " + std::to_string(balance.available) +
                            " < " + std::to_string(balance.required));
  }
  const Graph& g = lay.graph;
  const std::size_t n = lay.spine.size();

  std::vector<Label> labels(g.order(), 0);
  const auto spine_labels = standard_cycle_labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[lay.spine[i]] = spine_labels[i];

  std::vector<bool> on_spine(g.order(), false);
  for (Vertex v : lay.spine) on_spine[v] = true;
  std::vector<Vertex> surplus;
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex u : lay.middles[i]) surplus.push_back(u);
    for (Vertex p : lay.pendants[i]) surplus.push_back(p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex u : lay.middles[i]) {
      bool first = true;
      for (Vertex w : g.neighbors(u)) {
        if (on_spine[w]) continue;
        if (!first) surplus.push_back(w);
        first = false;
      }
    }
  }
  std::sort(surplus.begin(), surplus.end());
  std::size_t surplus_next = 0;

  for (std::size_t r = 1; r <= balance.rounds; ++r) {
    const auto image = coprime_bijection(n, Interval{r * n + 1, n});
    for (std::size_t i = 0; i < n; ++i) {
      const auto label = static_cast<Label>(image[spine_labels[i] - 1]);
      Vertex target;
      if (lay.middles[i].size() >= r) {
        const Vertex u = lay.middles[i][r - 1];
        auto nb = g.neighbors(u);
        target = *std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return !on_spine[w]; });
      } else {
        target = surplus.at(surplus_next++);
      }
      labels[target] = label;
    }
  }
  Labeling f = detail::complete_ascending(std::move(labels));
  if (is_neighborhood_prime(g, f)) {
    auto cert = make_npl_certificate(g, std::move(f), reason::ExplicitFormula{"lobster surplus"});
    return FamilyLabeling{g, std::move(cert)};
  }
  return FamilyLabeling{g, search_npl(g, budget)};
}

}  // namespace nplab
