#include "cmperm/permutation.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cmperm;

namespace {

const Graph kFig3 =
    Graph::make(6, {{1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}});

const Graph kFig5 = Graph::make(
    10, {{1, 6}, {1, 8}, {1, 9}, {1, 10}, {2, 7}, {2, 10}, {3, 8}, {3, 9}, {3, 10}, {4, 9}, {5, 10}});

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Realizer(Permutation::identity(2), Permutation::identity(3)), std::invalid_argument);

  const Permutation p({3, 1, 2});
  CHECK(p.at(1) == 3);
  CHECK(p.position(3) == 1);
  CHECK(p.inverse().seq() == std::vector<Vertex>{2, 3, 1});
  CHECK(Permutation::identity(4).is_identity());
}

TEST_CASE("perm_graph reproduces the drawn figures") {
  const Realizer fig1(Permutation({4, 2, 3, 1, 5}), Permutation({3, 5, 4, 1, 2}));
  CHECK(perm_graph(fig1) == Graph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 5}}));

  const Realizer same(Permutation({2, 3, 1}), Permutation({2, 3, 1}));
  CHECK(perm_graph(same).edge_count() == 0);

  const Realizer fig4(Permutation({1, 3, 5, 7, 2, 4, 6, 8}), Permutation({2, 1, 4, 3, 6, 5, 8, 7}));
  CHECK(perm_graph(fig4) == Graph::make(8, {{1, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {4, 5}, {4, 7}, {5, 6},
                                            {6, 7}, {7, 8}}));

  CHECK(perm_graph_id(Permutation({5, 4, 6, 1, 3, 2})) == kFig3);
  CHECK(perm_graph_id(Permutation::identity(5)).edge_count() == 0);
  CHECK(perm_graph_id(Permutation({4, 3, 2, 1})) == Graph::complete(4));
}

TEST_CASE("crossing rule is symmetric and counts inversions") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& a : perms) {
      std::vector<int> positions;
      for (Vertex v = 1; v <= n; ++v) positions.push_back(a.position(v));
      REQUIRE(perm_graph_id(a).edge_count() == inversion_count(positions));
      for (std::size_t k = 0; k < perms.size(); k += 7) {
        const auto& b = perms[k];
        REQUIRE(perm_graph(Realizer(a, b)) == perm_graph(Realizer(b, a)));
      }
    }
  }
}

TEST_CASE("transitive orientation") {
  const auto k3 = transitive_orientation(Graph::complete(3));
  REQUIRE(k3);
  CHECK(k3->orients(Graph::complete(3)));
  CHECK(k3->is_transitive());

  const auto p4 = transitive_orientation(oracle::path(4));
  REQUIRE(p4);
  CHECK(p4->orients(oracle::path(4)));
  CHECK(p4->is_transitive());

  CHECK_FALSE(transitive_orientation(oracle::cycle(5)));
  CHECK(transitive_orientation(Graph::edgeless(0)));

  CHECK(Orientation::from_arcs(3, {{1, 2}, {2, 3}}).is_transitive() == false);
  CHECK(Orientation::from_arcs(3, {{1, 2}, {2, 3}, {1, 3}}).is_transitive());
  CHECK(Orientation::from_arcs(3, {{1, 2}}).reversed().has_arc(2, 1));
}

TEST_CASE("transitive orientation agrees with exhaustive search") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto o = transitive_orientation(g);
      REQUIRE(o.has_value() == (oracle::orientation_count(g) > 0));
      if (o) {
        REQUIRE(o->orients(g));
        REQUIRE(o->is_transitive());
      }
    }
  }
  std::mt19937_64 rng(99);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Edge> edges;
    for (int u = 1; u <= 7; ++u) {
      for (int v = u + 1; v <= 7; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g = Graph::make(7, edges);
    if (g.edge_count() > 16) continue;
    REQUIRE(transitive_orientation(g).has_value() == (oracle::orientation_count(g) > 0));
  }
}

TEST_CASE("orientation counting") {
  CHECK(count_transitive_orientations(Graph::complete(3)) == 6);
  CHECK(count_transitive_orientations(oracle::path(4)) == 2);
  CHECK(count_transitive_orientations(oracle::cycle(4)) == 2);
  CHECK(count_transitive_orientations(oracle::cycle(5)) == 0);
  CHECK(count_transitive_orientations(Graph::edgeless(3)) == 1);
  CHECK_THROWS_AS(count_transitive_orientations(Graph::complete(7)), CapExceeded);
  CHECK(count_transitive_orientations(Graph::complete(5), 10) == 120);

  for (int n = 0; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      REQUIRE(count_transitive_orientations(g) == oracle::orientation_count(g));
    }
  }
}

TEST_CASE("recognition") {
  const auto fig5 = recognize_permutation_graph(kFig5);
  CHECK(fig5.outcome == RecognitionOutcome::not_cocomparability);
  CHECK_FALSE(fig5.realizer);
  CHECK(fig5.orientation);

  const Graph fig1 = Graph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}});
  const auto r1 = recognize_permutation_graph(fig1);
  REQUIRE(r1.outcome == RecognitionOutcome::permutation);
  REQUIRE(r1.realizer);
  CHECK(perm_graph(*r1.realizer) == fig1);

  const auto c5 = recognize_permutation_graph(oracle::cycle(5));
  CHECK(c5.outcome == RecognitionOutcome::not_comparability);
  CHECK_FALSE(transitive_orientation(complement(oracle::cycle(5))));

  CHECK(to_string(RecognitionOutcome::not_cocomparability) == "not_cocomparability");
}

TEST_CASE("recognition round-trips every Id-realizer up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const Graph g = perm_graph_id(pi);
      const auto r = recognize_permutation_graph(g);
      REQUIRE(r.outcome == RecognitionOutcome::permutation);
      REQUIRE(perm_graph(*r.realizer) == g);
    }
  }
}

TEST_CASE("recognition output is stable") {
  const auto a = recognize_permutation_graph(kFig3);
  const auto b = recognize_permutation_graph(kFig3);
  REQUIRE(a.realizer);
  CHECK(a.realizer->l1() == b.realizer->l1());
  CHECK(a.realizer->l2() == b.realizer->l2());
}

TEST_CASE("topological order breaks ties by smallest label") {
  const auto t = topological_order(4, {{3, 1}, {4, 2}});
  REQUIRE(t);
  CHECK(t->seq() == std::vector<Vertex>{3, 1, 4, 2});
  CHECK_FALSE(topological_order(2, {{1, 2}, {2, 1}}));
}
