#include "nplab/hamilton.hpp"

#include <algorithm>
#include <numeric>

#include "nplab/error.hpp"

namespace nplab {

bool is_cycle_in(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = cycle[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (!g.adjacent(v, cycle[(i + 1) % k])) return false;
  }
  return true;
}

bool is_hamilton_cycle(const Graph& g, const HamiltonCycle& c) {
  return c.size() == g.order() && is_cycle_in(g, c.order);
}

namespace {

std::vector<std::size_t> positions(const HamiltonCycle& c, std::size_t order) {
  std::vector<std::size_t> pos(order, c.size());
  for (std::size_t i = 0; i < c.size(); ++i) pos[c.order[i]] = i;
  return pos;
}

}  // namespace

ChordArcs chord_arcs(const HamiltonCycle& c, const Chord& ch) {
  const auto ia = std::find(c.order.begin(), c.order.end(), ch.a);
  const auto ib = std::find(c.order.begin(), c.order.end(), ch.b);
  if (ia == c.order.end() || ib == c.order.end()) {
    throw PreconditionError("chord endpoint is not on the cycle");
  }
  const std::size_t k = c.size();
  const auto pa = static_cast<std::size_t>(ia - c.order.begin());
  const auto pb = static_cast<std::size_t>(ib - c.order.begin());
  const std::size_t steps = (pb + k - pa) % k;
  return ChordArcs{steps + 1, k - steps + 1};
}

bool is_chord_of(const Graph& g, const HamiltonCycle& c, const Chord& ch) {
  if (ch.a >= g.order() || ch.b >= g.order() || ch.a == ch.b || !g.adjacent(ch.a, ch.b)) {
    return false;
  }
  const auto on_a = std::find(c.order.begin(), c.order.end(), ch.a) != c.order.end();
  const auto on_b = std::find(c.order.begin(), c.order.end(), ch.b) != c.order.end();
  if (!on_a || !on_b) return false;
  const auto arcs = chord_arcs(c, ch);
  return arcs.forward > 2 && arcs.backward > 2;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, BudgetMeter& meter)
      : g_(g), meter_(meter), n_(g.order()), visited_(n_, 0), free_deg_(n_, 0) {}

  SearchStatus run(std::vector<Vertex>& out) {
    if (n_ < 3 || g_.min_degree() < 2 || !g_.is_connected()) return SearchStatus::Exhausted;
    start_ = 0;
    for (Vertex v = 1; v < n_; ++v) {
      if (g_.degree(v) < g_.degree(start_)) start_ = v;
    }
    for (Vertex v = 0; v < n_; ++v) free_deg_[v] = g_.degree(v);
    visit(start_);
    path_.push_back(start_);
    const bool ok = extend(start_);
    if (ok) {
      out = path_;
      return SearchStatus::Found;
    }
    return aborted_ ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  }

 private:
  void visit(Vertex v) {
    visited_[v] = 1;
    ++visited_count_;
    for (Vertex w : g_.neighbors(v)) --free_deg_[w];
  }
  void unvisit(Vertex v) {
    visited_[v] = 0;
    --visited_count_;
    for (Vertex w : g_.neighbors(v)) ++free_deg_[w];
  }

  // An unvisited vertex w needs two ways in/out among unvisited vertices,
  // the path end and the start; with nothing unvisited left it must be last.
  bool stranded(Vertex w, Vertex end) const {
    const std::size_t remaining = n_ - visited_count_;
    const std::size_t links = free_deg_[w] + (g_.adjacent(w, end) ? 1 : 0) +
                              (g_.adjacent(w, start_) ? 1 : 0);
    if (links < 2) return true;
    return free_deg_[w] == 0 && remaining > 1;
  }

  bool feasible(Vertex end, Vertex prev) {
    const std::size_t remaining = n_ - visited_count_;
    if (remaining == 0) return true;
    if (free_deg_[start_] == 0) return false;
    for (Vertex w : g_.neighbors(end)) {
      if (!visited_[w] && stranded(w, end)) return false;
    }
    for (Vertex w : g_.neighbors(prev)) {
      if (!visited_[w] && stranded(w, end)) return false;
    }
    // The unvisited vertices must stay connected to each other.
    stack_.clear();
    Vertex seed = 0;
    for (Vertex w : g_.neighbors(end)) {
      if (!visited_[w]) {
        seed = w;
        break;
      }
    }
    if (visited_[seed]) return false;
    mark_.assign(n_, 0);
    mark_[seed] = 1;
    stack_.push_back(seed);
    std::size_t reached = 0;
    while (!stack_.empty()) {
      Vertex v = stack_.back();
      stack_.pop_back();
      ++reached;
      for (Vertex w : g_.neighbors(v)) {
        if (!visited_[w] && !mark_[w]) {
          mark_[w] = 1;
          stack_.push_back(w);
        }
      }
    }
    return reached == remaining;
  }

  bool extend(Vertex end) {
    if (!meter_.tick()) {
      aborted_ = true;
      return false;
    }
    if (visited_count_ == n_) return g_.adjacent(end, start_);

    std::vector<Vertex> options;
    for (Vertex w : g_.neighbors(end)) {
      if (!visited_[w]) options.push_back(w);
    }
    // A neighbor of the end with only one other way out must come next.
    Vertex forced = static_cast<Vertex>(n_);
    for (Vertex w : options) {
      const std::size_t links = free_deg_[w] + (g_.adjacent(w, start_) ? 1 : 0);
      if (links <= 1 && visited_count_ + 1 < n_) {
        if (forced != n_) return false;
        forced = w;
      }
    }
    if (forced != n_) options.assign(1, forced);
    std::stable_sort(options.begin(), options.end(),
                     [&](Vertex x, Vertex y) { return free_deg_[x] < free_deg_[y]; });

    for (Vertex w : options) {
      visit(w);
      path_.push_back(w);
      if (feasible(w, end) && extend(w)) return true;
      path_.pop_back();
      unvisit(w);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  BudgetMeter& meter_;
  std::size_t n_;
  std::vector<char> visited_;
  std::vector<std::size_t> free_deg_;
  std::vector<Vertex> path_;
  std::vector<Vertex> stack_;
  std::vector<char> mark_;
  std::size_t visited_count_ = 0;
  Vertex start_ = 0;
  bool aborted_ = false;
};

SearchOutcome<HamiltonCycle> hamilton_with_meter(const Graph& g, BudgetMeter& meter) {
  const auto before = meter.nodes();
  HamiltonSearch search(g, meter);
  std::vector<Vertex> cycle;
  const auto status = search.run(cycle);
  SearchOutcome<HamiltonCycle> out;
  out.status = status;
  out.nodes = meter.nodes() - before;
  if (status == SearchStatus::Found) out.value = HamiltonCycle{std::move(cycle)};
  return out;
}

template <class Pred>
std::optional<Chord> find_chord(const Graph& g, const HamiltonCycle& c, Pred accept) {
  const auto pos = positions(c, g.order());
  const std::size_t k = c.size();
  for (Vertex a = 0; a < g.order(); ++a) {
    if (pos[a] == k) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || pos[b] == k) continue;
      const std::size_t steps = (pos[b] + k - pos[a]) % k;
      if (steps == 1 || steps == k - 1) continue;
      if (accept(steps + 1) || accept(k - steps + 1)) return Chord{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

SearchOutcome<HamiltonCycle> find_hamilton_cycle(const Graph& g, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  return hamilton_with_meter(g, meter);
}

SearchOutcome<CycleMissingOne> find_cycle_missing_one(const Graph& g, const SearchBudget& budget) {
  BudgetMeter meter(budget);
  SearchOutcome<CycleMissingOne> out;
  bool any_budget = false;
  std::vector<Vertex> keep(g.order() - 1);
  for (Vertex x = 0; x < g.order(); ++x) {
    std::iota(keep.begin(), keep.begin() + x, Vertex{0});
    std::iota(keep.begin() + x, keep.end(), x + 1);
    if (keep.size() < 3) break;
    const Graph rest = g.induced(keep);
    auto sub = hamilton_with_meter(rest, meter);
    if (sub.found()) {
      HamiltonCycle cycle;
      for (Vertex v : sub.value->order) cycle.order.push_back(keep[v]);
      out.status = SearchStatus::Found;
      out.value = CycleMissingOne{std::move(cycle), x};
      out.nodes = meter.nodes();
      return out;
    }
    if (sub.status == SearchStatus::BudgetExhausted) {
      any_budget = true;
      break;
    }
  }
  out.status = any_budget ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  out.nodes = meter.nodes();
  return out;
}

std::optional<Chord> find_chord_4k(const Graph& g, const HamiltonCycle& c) {
  return find_chord(g, c, [](std::size_t len) { return len % 4 == 0; });
}

std::optional<Chord> find_odd_chord(const Graph& g, const HamiltonCycle& c) {
  return find_chord(g, c, [](std::size_t len) { return len % 2 == 1; });
}

}  // namespace nplab
