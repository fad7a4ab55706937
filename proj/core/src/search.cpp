#include "nplab/search.hpp"

#include <algorithm>
#include <numeric>

namespace nplab {
namespace {

constexpr Label kCapacityPrimes[] = {2, 3};

std::vector<Vertex> by_descending_degree(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

// Classes of pairwise twins (equal open or equal closed neighborhoods).
// Any permutation inside one class is an automorphism fixing everything else.
std::vector<std::size_t> twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cls(n);
  std::iota(cls.begin(), cls.end(), std::size_t{0});
  for (Vertex x = 0; x < n; ++x) {
    if (cls[x] != x) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (cls[y] != y || g.degree(x) != g.degree(y)) continue;
      VertexSet nx = g.neighbor_set(x);
      VertexSet ny = g.neighbor_set(y);
      nx.reset(y);
      ny.reset(x);
      if (nx == ny) cls[y] = x;
    }
  }
  return cls;
}

class NplSearch {
 public:
  NplSearch(const Graph& g, BudgetMeter& meter, const NplSearchOptions& options)
      : g_(g),
        meter_(meter),
        n_(g.order()),
        order_(by_descending_degree(g)),
        label_(n_, 0),
        gcd_(n_, 0),
        open_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v) open_[v] = static_cast<std::uint32_t>(g.degree(v));
    if (options.symmetry_breaking) {
      twins_ = twin_classes(g);
      const auto reps = vertex_orbit_representatives(g, SearchBudget::nodes(200000));
      if (!reps.empty()) {
        root_allowed_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v) root_allowed_[v] = reps[v] == v;
      }
    }
  }

  SearchStatus run() {
    if (place(1)) return SearchStatus::Found;
    return aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  }

  Labeling labeling() const { return Labeling(label_); }

 private:
  bool assign(Vertex x, Label l) {
    bool ok = true;
    label_[x] = l;
    for (Vertex w : g_.neighbors(x)) {
      trail_.push_back(gcd_[w]);
      gcd_[w] = std::gcd(gcd_[w], std::uint64_t{l});
      if (--open_[w] == 0 && gcd_[w] != 1 && g_.degree(w) >= 2) ok = false;
    }
    return ok;
  }

  void undo(Vertex x) {
    auto nb = g_.neighbors(x);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      gcd_[*it] = trail_.back();
      trail_.pop_back();
      ++open_[*it];
    }
    label_[x] = 0;
  }

  // Multiples of p still to place need slots that would not close an
  // all-multiples-of-p neighborhood.
  bool capacity_ok(Label placed) const {
    for (Label p : kCapacityPrimes) {
      const std::size_t left = n_ / p - placed / p;
      if (left == 0) continue;
      std::size_t slots = 0;
      for (Vertex x = 0; x < n_ && slots < left; ++x) {
        if (label_[x]) continue;
        bool blocked = false;
        for (Vertex w : g_.neighbors(x)) {
          if (open_[w] == 1 && gcd_[w] % p == 0 && g_.degree(w) >= 2) {
            blocked = true;
            break;
          }
        }
        if (!blocked) ++slots;
      }
      if (slots < left) return false;
    }
    return true;
  }

  // Lower is better: placements that settle open neighborhoods come first,
  // placements that leave a neighborhood one step from failing come last.
  int placement_score(Vertex x, Label l) const {
    int score = 0;
    for (Vertex w : g_.neighbors(x)) {
      if (g_.degree(w) < 2 || gcd_[w] == 1) continue;
      const std::uint64_t next = std::gcd(gcd_[w], std::uint64_t{l});
      if (next == 1) {
        score -= 2;
      } else if (open_[w] == 2) {
        score += 3;
      } else {
        score += 1;
      }
    }
    return score;
  }

  std::vector<Vertex> candidates(Label l) const {
    std::vector<std::pair<int, Vertex>> scored;
    scored.reserve(n_);
    for (Vertex x : order_) {
      if (!label_[x]) scored.emplace_back(placement_score(x, l), x);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vertex> out;
    out.reserve(scored.size());
    for (const auto& [score, x] : scored) out.push_back(x);
    return out;
  }

  bool place(Label l) {
    if (l > n_) return true;
    std::vector<char> class_tried;
    if (!twins_.empty()) class_tried.assign(n_, 0);
    for (Vertex x : candidates(l)) {
      if (label_[x]) continue;
      if (l == 1 && !root_allowed_.empty() && !root_allowed_[x]) continue;
      if (!twins_.empty()) {
        if (class_tried[twins_[x]]) continue;
        class_tried[twins_[x]] = 1;
      }
      if (!meter_.tick()) {
        aborted_ = true;
        return false;
      }
      const bool ok = assign(x, l);
      if (ok && capacity_ok(l) && place(l + 1)) return true;
      undo(x);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Label> label_;
  std::vector<std::uint64_t> gcd_;
  std::vector<std::uint32_t> open_;
  std::vector<std::uint64_t> trail_;
  std::vector<std::size_t> twins_;
  std::vector<char> root_allowed_;
  bool aborted_ = false;
};

class PrimeSearch {
 public:
  PrimeSearch(const Graph& g, BudgetMeter& meter)
      : g_(g), meter_(meter), n_(g.order()), order_(by_descending_degree(g)), label_(n_, 0) {}

  SearchStatus run() {
    if (place(1)) return SearchStatus::Found;
    return aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  }

  Labeling labeling() const { return Labeling(label_); }

 private:
  bool fits(Vertex x, Label l) const {
    for (Vertex w : g_.neighbors(x)) {
      if (label_[w] && std::gcd(label_[w], l) != 1) return false;
    }
    return true;
  }

  bool capacity_ok(Label placed) const {
    for (Label p : kCapacityPrimes) {
      const std::size_t left = n_ / p - placed / p;
      if (left == 0) continue;
      std::size_t slots = 0;
      for (Vertex x = 0; x < n_ && slots < left; ++x) {
        if (label_[x]) continue;
        const auto nb = g_.neighbors(x);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return label_[w] % p == 0 && label_[w]; })) {
          ++slots;
        }
      }
      if (slots < left) return false;
    }
    return true;
  }

  bool place(Label l) {
    if (l > n_) return true;
    for (Vertex x : order_) {
      if (label_[x] || !fits(x, l)) continue;
      if (!meter_.tick()) {
        aborted_ = true;
        return false;
      }
      label_[x] = l;
      if (capacity_ok(l) && place(l + 1)) return true;
      label_[x] = 0;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Label> label_;
  bool aborted_ = false;
};

// Backtracking search for an automorphism sending `from` to `to`.
class AutomorphismSearch {
 public:
  AutomorphismSearch(const Graph& g, BudgetMeter& meter) : g_(g), meter_(meter), n_(g.order()) {}

  std::optional<std::vector<Vertex>> map(Vertex from, Vertex to) {
    image_.assign(n_, kNone);
    used_.assign(n_, 0);
    sequence_.clear();
    // Breadth-first order from `from` keeps adjacency checks tight.
    std::vector<char> seen(n_, 0);
    auto bfs = [&](Vertex root) {
      std::size_t head = sequence_.size();
      sequence_.push_back(root);
      seen[root] = 1;
      while (head < sequence_.size()) {
        const Vertex v = sequence_[head++];
        for (Vertex w : g_.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            sequence_.push_back(w);
          }
        }
      }
    };
    bfs(from);
    for (Vertex r = 0; r < n_; ++r) {
      if (!seen[r]) bfs(r);
    }
    if (g_.degree(from) != g_.degree(to)) return std::nullopt;
    image_[from] = to;
    used_[to] = 1;
    if (extend(1)) return image_;
    return std::nullopt;
  }

  bool aborted() const { return meter_.tripped(); }

 private:
  static constexpr Vertex kNone = ~Vertex{0};

  bool consistent(Vertex v, Vertex img) const {
    if (g_.degree(v) != g_.degree(img)) return false;
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
      const Vertex u = sequence_[i];
      if (image_[u] == kNone || u == v) continue;
      if (g_.adjacent(u, v) != g_.adjacent(image_[u], img)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == sequence_.size()) return true;
    if (!meter_.tick()) return false;
    const Vertex v = sequence_[depth];
    for (Vertex img = 0; img < n_; ++img) {
      if (used_[img] || !consistent(v, img)) continue;
      image_[v] = img;
      used_[img] = 1;
      if (extend(depth + 1)) return true;
      image_[v] = kNone;
      used_[img] = 0;
      if (meter_.tripped()) return false;
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::size_t n_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<Vertex> sequence_;
};

}  // namespace

std::vector<Vertex> vertex_orbit_representatives(const Graph& g, const SearchBudget& budget) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };

  BudgetMeter meter(budget);
  AutomorphismSearch search(g, meter);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = v + 1; u < n; ++u) {
      if (find(u) == find(v) || g.degree(u) != g.degree(v)) continue;
      auto perm = search.map(v, u);
      if (search.aborted()) return {};
      if (perm) {
        for (Vertex x = 0; x < n; ++x) unite(x, (*perm)[x]);
      }
    }
  }
  std::vector<Vertex> reps(n);
  for (Vertex v = 0; v < n; ++v) reps[v] = find(v);
  return reps;
}

SearchOutcome<Labeling> search_npl_labeling(const Graph& g, const SearchBudget& budget,
                                            const NplSearchOptions& options) {
  BudgetMeter meter(budget);
  NplSearch search(g, meter, options);
  SearchOutcome<Labeling> out;
  out.status = search.run();
  out.nodes = meter.nodes();
  if (out.found()) out.value = search.labeling();
  return out;
}

Certificate search_npl(const Graph& g, const SearchBudget& budget, const NplSearchOptions& options) {
  auto result = search_npl_labeling(g, budget, options);
  switch (result.status) {
    case SearchStatus::Found:
      return make_npl_certificate(g, std::move(*result.value), reason::SearchFound{result.nodes});
    case SearchStatus::Exhausted:
      return make_not_npl_certificate(reason::SearchExhausted{result.nodes});
    case SearchStatus::BudgetExhausted:
      break;
  }
  return make_unknown_certificate(result.nodes);
}

SearchOutcome<Labeling> search_prime_labeling(const Graph& g, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  PrimeSearch search(g, meter);
  SearchOutcome<Labeling> out;
  out.status = search.run();
  out.nodes = meter.nodes();
  if (out.found()) out.value = search.labeling();
  return out;
}

}  // namespace nplab
