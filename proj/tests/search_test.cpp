#include <gtest/gtest.h>

#include <random>

#include "nplab/generators.hpp"
#include "nplab/graph6.hpp"
#include "nplab/hamilton.hpp"
#include "nplab/random.hpp"
#include "nplab/search.hpp"
#include "support/oracles.hpp"

namespace nplab {
namespace {

std::vector<Graph> corpus(int n) {
  std::vector<Graph> out;
  for (const auto& line :
       oracle::read_lines(std::string(NPLAB_TEST_DATA_DIR) + "/graph" + std::to_string(n) + ".g6")) {
    out.push_back(parse_graph6(line));
  }
  return out;
}

HamiltonCycle identity_cycle(std::size_t n) {
  HamiltonCycle c;
  for (Vertex v = 0; v < n; ++v) c.order.push_back(v);
  return c;
}

TEST(Cycle, Validation) {
  const Graph c5 = gen_cycle(5);
  EXPECT_TRUE(is_hamilton_cycle(c5, identity_cycle(5)));
  EXPECT_FALSE(is_hamilton_cycle(c5, HamiltonCycle{{0, 2, 1, 3, 4}}));
  const std::vector<Vertex> partial{0, 1, 2};
  EXPECT_FALSE(is_cycle_in(c5, partial));
  const Graph chorded = gen_cycle(6).with_edge(0, 3);
  EXPECT_TRUE(is_chord_of(chorded, identity_cycle(6), Chord{0, 3}));
  EXPECT_FALSE(is_chord_of(chorded, identity_cycle(6), Chord{0, 1}));
  const auto arcs = chord_arcs(identity_cycle(6), Chord{0, 2});
  EXPECT_EQ(arcs.forward + arcs.backward, 8u);
  EXPECT_EQ(arcs.forward, 3u);
}

TEST(Hamilton, Examples) {
  const auto k4 = find_hamilton_cycle(gen_complete(4));
  ASSERT_TRUE(k4.found());
  EXPECT_TRUE(is_hamilton_cycle(gen_complete(4), *k4.value));

  const auto gp84 = find_hamilton_cycle(gen_generalized_petersen(8, 4));
  EXPECT_TRUE(gp84.exhausted());
  EXPECT_FALSE(gp84.value.has_value());

  EXPECT_TRUE(find_hamilton_cycle(gen_path(3)).exhausted());
}

TEST(Hamilton, BudgetIsDistinctFromExhaustion) {
  const auto r = find_hamilton_cycle(gen_generalized_petersen(20, 10), SearchBudget::nodes(5));
  EXPECT_EQ(r.status, SearchStatus::BudgetExhausted);
}

TEST(Hamilton, SoundAndCompleteOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const double p = 0.25 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    const Graph g = sample_gnp(n, p, rng());
    const auto r = find_hamilton_cycle(g);
    ASSERT_NE(r.status, SearchStatus::BudgetExhausted);
    ASSERT_EQ(r.found(), oracle::has_hamilton_cycle(g)) << write_graph6(g);
    if (r.found()) ASSERT_TRUE(is_hamilton_cycle(g, *r.value));
  }
}

TEST(CycleMissingOne, Examples) {
  const Graph c4p = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
  const auto r = find_cycle_missing_one(c4p);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.value->missing, 4u);
  EXPECT_EQ(r.value->cycle.size(), 4u);

  const Graph grid = gen_grid({5, 5});
  const auto g = find_cycle_missing_one(grid);
  ASSERT_TRUE(g.found());
  EXPECT_EQ(g.value->cycle.size(), 24u);
  EXPECT_TRUE(is_cycle_in(grid, g.value->cycle.order));
  const Vertex x = g.value->missing;
  EXPECT_EQ((x / 5 + x % 5) % 2, 0u);  // the 13-vertex color class

  EXPECT_FALSE(find_cycle_missing_one(gen_cycle(6)).found());
}

TEST(Chords, FourK) {
  const auto c = identity_cycle(6);
  const Graph g = gen_cycle(6).with_edge(2, 5);
  const auto ch = find_chord_4k(g, c);
  ASSERT_TRUE(ch.has_value());
  EXPECT_EQ(*ch, (Chord{2, 5}));
  EXPECT_FALSE(find_chord_4k(gen_cycle(6), c).has_value());

  const Graph grid = gen_grid({3, 6});
  const auto ham = find_hamilton_cycle(grid);
  ASSERT_TRUE(ham.found());
  const auto square = find_chord_4k(grid, *ham.value);
  ASSERT_TRUE(square.has_value());
  const auto arcs = chord_arcs(*ham.value, *square);
  EXPECT_TRUE(arcs.forward % 4 == 0 || arcs.backward % 4 == 0);
}

TEST(Chords, Odd) {
  const auto c6 = identity_cycle(6);
  const auto tri = find_odd_chord(gen_cycle(6).with_edge(0, 2), c6);
  ASSERT_TRUE(tri.has_value());
  EXPECT_EQ(*tri, (Chord{0, 2}));
  // A diameter of C8 closes two 5-cycles.
  const auto diameter = find_odd_chord(gen_cycle(8).with_edge(0, 4), identity_cycle(8));
  ASSERT_TRUE(diameter.has_value());
  EXPECT_EQ(chord_arcs(identity_cycle(8), *diameter).forward, 5u);
  EXPECT_FALSE(find_odd_chord(gen_cycle(8).with_edge(0, 3), identity_cycle(8)).has_value());

  const Graph gp = gen_generalized_petersen(9, 3);
  const auto ham = find_hamilton_cycle(gp);
  ASSERT_TRUE(ham.found());
  const auto ch = find_odd_chord(gp, *ham.value);
  ASSERT_TRUE(ch.has_value());
  EXPECT_EQ(chord_arcs(*ham.value, *ch).forward % 2, 1u);
}

TEST(SearchNpl, Examples) {
  const auto c5 = search_npl(gen_cycle(5));
  EXPECT_EQ(c5.tag(), "SearchFound");
  ASSERT_TRUE(c5.labeling.has_value());
  EXPECT_TRUE(is_neighborhood_prime(gen_cycle(5), *c5.labeling));

  EXPECT_EQ(search_npl(gen_cycle(6)).tag(), "SearchExhausted");
  const std::vector<Graph> parts{gen_cycle(3), gen_cycle(3)};
  EXPECT_EQ(search_npl(gen_union(parts)).tag(), "SearchExhausted");
}

TEST(SearchNpl, BudgetAndCancellation) {
  const Graph g = gen_generalized_petersen(11, 2);
  const auto limited = search_npl_labeling(g, SearchBudget::nodes(3));
  EXPECT_EQ(limited.status, SearchStatus::BudgetExhausted);
  const auto cert = search_npl(g, SearchBudget::nodes(3));
  EXPECT_EQ(cert.verdict, Verdict::Unknown);
  EXPECT_EQ(cert.tag(), "BudgetExhausted");

  std::stop_source source;
  source.request_stop();
  SearchBudget stopped;
  stopped.stop = source.get_token();
  const std::vector<Graph> parts{gen_cycle(6), gen_cycle(3), gen_path(4), gen_complete(3),
                                 gen_star(5)};
  EXPECT_EQ(search_npl_labeling(gen_union(parts), stopped).status, SearchStatus::BudgetExhausted);
}

TEST(SearchNpl, MatchesNaiveEnumerationUpToOrderSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus(n)) {
      const auto r = search_npl_labeling(g);
      ASSERT_NE(r.status, SearchStatus::BudgetExhausted);
      ASSERT_EQ(r.found(), oracle::has_npl(g)) << write_graph6(g);
      if (r.found()) ASSERT_TRUE(oracle::is_npl(g, {r.value->values().begin(), r.value->values().end()}));
    }
  }
}

TEST(SearchNpl, SymmetryBreakingAgreesWithDefault) {
  NplSearchOptions symmetric;
  symmetric.symmetry_breaking = true;
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : corpus(n)) {
      const auto plain = search_npl_labeling(g);
      const auto reduced = search_npl_labeling(g, {}, symmetric);
      ASSERT_EQ(plain.found(), reduced.found()) << write_graph6(g);
      if (reduced.found()) ASSERT_TRUE(is_neighborhood_prime(g, *reduced.value));
    }
  }
}

TEST(SearchNpl, EdgeAdditionKeepsNpl) {
  std::mt19937_64 rng(4242);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 4 + rng() % 6;
    const Graph g = sample_gnp(n, 0.35, rng());
    if (!search_npl_labeling(g).found()) continue;
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.adjacent(u, v) && g.degree(u) >= 2 && g.degree(v) >= 2) candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) continue;
    const auto [u, v] = candidates[rng() % candidates.size()];
    ASSERT_TRUE(search_npl_labeling(g.with_edge(u, v)).found()) << write_graph6(g);
    ++checked;
  }
}

TEST(SearchPrime, Examples) {
  const std::vector<Graph> odd{gen_cycle(3), gen_cycle(3)};
  EXPECT_TRUE(search_prime_labeling(gen_union(odd)).exhausted());
  const std::vector<Graph> even{gen_cycle(4), gen_cycle(4)};
  const auto r = search_prime_labeling(gen_union(even));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_prime_labeling(gen_union(even), *r.value));
}

TEST(SearchPrime, MatchesNaiveEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : corpus(n)) {
      ASSERT_EQ(search_prime_labeling(g).found(), oracle::has_prime_labeling(g)) << write_graph6(g);
    }
  }
}

TEST(Orbits, SimpleGraphs) {
  EXPECT_EQ(vertex_orbit_representatives(gen_cycle(5)), (std::vector<Vertex>(5, 0)));
  EXPECT_EQ(vertex_orbit_representatives(gen_star(3)), (std::vector<Vertex>{0, 1, 1, 1}));
  EXPECT_EQ(vertex_orbit_representatives(gen_path(4)), (std::vector<Vertex>{0, 1, 1, 0}));
}

}  // namespace
}  // namespace nplab
