#include <random>

#include "cmperm/graph.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cmperm;

namespace {

Graph fig1() { return Graph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}}); }

Graph random_graph(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::make(n, edges);
}

}  // namespace

TEST_CASE("make_graph canonicalizes and validates") {
  const Graph g = fig1();
  CHECK(g.n() == 5);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});

  CHECK(Graph::make(3, {}).edge_count() == 0);
  CHECK(Graph::make(2, {{1, 2}, {2, 1}}).edges() == std::vector<Edge>{{1, 2}});

  CHECK_THROWS_AS(Graph::make(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::make(3, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::make(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::make(-1, {}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph::edgeless(3));
  CHECK(complement(complement(fig1())) == fig1());
  CHECK(complement(oracle::path(4)).edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 4}});
  CHECK(complement(Graph::edgeless(0)).n() == 0);
}

TEST_CASE("induced_subgraph keeps labels") {
  const auto sub = induced_subgraph(fig1(), {1, 2, 5});
  CHECK(sub.graph == Graph::complete(3));
  CHECK(sub.labels == VertexSet{1, 2, 5});

  CHECK(induced_subgraph(fig1(), {}).graph.n() == 0);
  CHECK(induced_subgraph(fig1(), {1, 2, 3, 4, 5}).graph == fig1());

  const auto gap = induced_subgraph(fig1(), {3, 5});
  CHECK(gap.graph.edge_count() == 0);
  CHECK_THROWS_AS(induced_subgraph(fig1(), {6}), std::invalid_argument);
}

TEST_CASE("maximal cliques and independent sets") {
  CHECK(maximal_cliques(fig1()) == std::vector<VertexSet>{{1, 2, 5}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(maximal_cliques(Graph::edgeless(3)) == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK(maximal_cliques(Graph::complete(4)) == std::vector<VertexSet>{{1, 2, 3, 4}});
  CHECK(maximal_cliques(Graph::edgeless(0)).empty());

  CHECK(maximal_independent_sets(fig1()) == std::vector<VertexSet>{{1, 3}, {1, 4}, {2, 4}, {3, 5}});
  CHECK(maximal_independent_sets(Graph::complete(4)) == std::vector<VertexSet>{{1}, {2}, {3}, {4}});
  CHECK(maximal_independent_sets(Graph::edgeless(3)) == std::vector<VertexSet>{{1, 2, 3}});
}

TEST_CASE("clique enumeration matches subset scan on all graphs up to 5 vertices") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      REQUIRE(maximal_cliques(g) == oracle::maximal_cliques(g));
      REQUIRE(maximal_independent_sets(g) == maximal_cliques(complement(g)));
    }
  }
}

TEST_CASE("clique enumeration matches subset scan on random graphs") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 6 + trial % 7);
    const auto cliques = maximal_cliques(g);
    REQUIRE(cliques == oracle::maximal_cliques(g));
    for (const auto& c : cliques) {
      for (Vertex v = 1; v <= g.n(); ++v) {
        if (std::find(c.begin(), c.end(), v) != c.end()) continue;
        bool all = true;
        for (Vertex u : c) all = all && g.adjacent(u, v);
        REQUIRE_FALSE(all);
      }
    }
    REQUIRE(maximal_independent_sets(g) == oracle::maximal_independent_sets(g));
  }
}

TEST_CASE("well-covered") {
  const auto f1 = is_well_covered(fig1());
  CHECK(f1.well_covered);
  CHECK(f1.r == 2);
  CHECK_FALSE(f1.witness);

  const Graph fig3 =
      Graph::make(6, {{1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}});
  CHECK(is_well_covered(fig3).well_covered);
  CHECK(is_well_covered(fig3).r == 2);

  CHECK(is_well_covered(oracle::path(4)).well_covered);

  const auto p3 = is_well_covered(oracle::path(3));
  CHECK_FALSE(p3.well_covered);
  REQUIRE(p3.witness);
  CHECK(p3.witness->first == VertexSet{2});
  CHECK(p3.witness->second == VertexSet{1, 3});

  const auto empty = is_well_covered(Graph::edgeless(0));
  CHECK(empty.well_covered);
  CHECK(empty.r == 0);

  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto w = is_well_covered(g);
      const auto sets = oracle::maximal_independent_sets(g);
      bool same = true;
      for (const auto& s : sets) same = same && s.size() == sets.front().size();
      if (n == 0) same = true;
      REQUIRE(w.well_covered == same);
      if (w.well_covered && n > 0) {
        for (const auto& s : sets) REQUIRE(s.size() == w.r);
      }
    }
  }
}

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(fig1()) == VertexSet{1});
  CHECK(simplicial_vertices(Graph::complete(4)) == VertexSet{1, 2, 3, 4});
  CHECK(simplicial_vertices(oracle::cycle(4)).empty());
}

TEST_CASE("connected components") {
  CHECK(connected_components(fig1()) == std::vector<VertexSet>{{1, 2, 3, 4, 5}});
  CHECK(connected_components(Graph::edgeless(3)) == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK(connected_components(Graph::make(4, {{1, 3}, {2, 4}})) == std::vector<VertexSet>{{1, 3}, {2, 4}});
  CHECK(is_connected(fig1()));
  CHECK_FALSE(is_connected(Graph::edgeless(2)));
}

TEST_CASE("outputs are deterministic") {
  std::mt19937_64 rng(7);
  const Graph g = random_graph(rng, 9);
  CHECK(maximal_cliques(g) == maximal_cliques(g));
  CHECK(maximal_independent_sets(g) == maximal_independent_sets(g));
  auto cl = maximal_cliques(g);
  CHECK(std::is_sorted(cl.begin(), cl.end()));
}
