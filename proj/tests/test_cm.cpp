#include "cmperm/cm.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace cmperm;

namespace {

const Graph kFig1 = Graph::make(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {2, 5}});
const Graph kFig3 =
    Graph::make(6, {{1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}});
const Graph kFig4 =
    Graph::make(8, {{1, 2}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}, {7, 8}});

Poset example() { return poset_from_realizer(Realizer(Permutation::identity(6), Permutation({5, 4, 6, 1, 3, 2}))); }

std::vector<VertexSet> sorted_parts(CliquePartition p) {
  for (auto& s : p.parts) std::sort(s.begin(), s.end());
  std::sort(p.parts.begin(), p.parts.end());
  return p.parts;
}

}  // namespace

TEST_CASE("clique partitions") {
  const auto f3 = clique_partitions(kFig3, 2, 2);
  REQUIRE(f3.size() == 2);
  CHECK(sorted_parts(f3[0]) == std::vector<VertexSet>{{1, 4, 5}, {2, 3, 6}});
  CHECK(sorted_parts(f3[1]) == std::vector<VertexSet>{{1, 6}, {2, 3, 4, 5}});

  const auto f1 = clique_partitions(kFig1, 2, 2);
  REQUIRE(f1.size() == 1);
  CHECK(sorted_parts(f1[0]) == std::vector<VertexSet>{{1, 2, 5}, {3, 4}});

  const auto k4 = clique_partitions(Graph::complete(4), 1, 2);
  REQUIRE(k4.size() == 1);
  CHECK(sorted_parts(k4[0]) == std::vector<VertexSet>{{1, 2, 3, 4}});

  CHECK(clique_partitions(kFig3, 2).size() == 2);
  CHECK(clique_partitions(kFig1, 2).size() == 1);
  CHECK(clique_partitions(kFig4, 4).size() == 1);
  CHECK(clique_partitions(kFig3, 3).empty());
  CHECK(clique_partitions(Graph::edgeless(0), 0).size() == 1);
}

TEST_CASE("clique partition count matches brute force on all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const auto w = is_well_covered(g);
      if (!w.well_covered) continue;
      const auto found = clique_partitions(g, w.r);
      REQUIRE(found.size() == oracle::clique_partition_count(g, w.r));
      for (const auto& p : found) {
        validate_clique_partition(g, p);
        REQUIRE(p.parts.size() == w.r);
        for (const auto& part : p.parts) REQUIRE(oracle::clique_mask(g, [&] {
          std::uint32_t m = 0;
          for (Vertex v : part) m |= 1u << (v - 1);
          return m;
        }()));
      }
    }
  }
}

TEST_CASE("partition validation rejects bad input") {
  CHECK_THROWS_AS(validate_clique_partition(kFig1, {{{1, 2}, {3, 4}, {5}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_clique_partition(kFig1, {{{1, 2, 5}, {3, 4}, {4}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_clique_partition(kFig1, {{{1, 2, 5}, {3}}}), std::invalid_argument);
  CHECK_NOTHROW(validate_clique_partition(kFig1, {{{1, 2, 5}, {3, 4}}}));
}

TEST_CASE("CM by the clique-partition characterization") {
  const auto f1 = is_cm_permutation(kFig1);
  CHECK(f1.cm);
  CHECK(f1.reason == CmReason::unique_partition);
  CHECK(f1.r == 2);

  const auto f3 = is_cm_permutation(kFig3);
  CHECK_FALSE(f3.cm);
  CHECK(f3.reason == CmReason::multiple_partitions);
  CHECK(f3.partitions_found.size() == 2);

  const auto f4 = is_cm_permutation(kFig4);
  CHECK(f4.cm);
  REQUIRE(f4.partitions_found.size() == 1);
  CHECK(sorted_parts(f4.partitions_found[0]) == std::vector<VertexSet>{{1, 2}, {3, 4}, {5, 6}, {7, 8}});

  const auto p3 = is_cm_permutation(oracle::path(3));
  CHECK_FALSE(p3.cm);
  CHECK(p3.reason == CmReason::not_well_covered);

  CHECK(is_cm_permutation(Graph::complete(4)).reason == CmReason::antichain_or_trivial);
  CHECK(is_cm_permutation(Graph::edgeless(3)).reason == CmReason::antichain_or_trivial);
  CHECK(is_cm_permutation(Graph::edgeless(0)).cm);

  const Graph fig5 = Graph::make(
      10, {{1, 6}, {1, 8}, {1, 9}, {1, 10}, {2, 7}, {2, 10}, {3, 8}, {3, 9}, {3, 10}, {4, 9}, {5, 10}});
  CHECK_THROWS_AS(is_cm_permutation(fig5), NotPermutationGraph);
  try {
    is_cm_permutation(fig5);
  } catch (const NotPermutationGraph& e) {
    CHECK(e.recognition().outcome == RecognitionOutcome::not_cocomparability);
  }
  CHECK_THROWS_AS(is_cm_permutation(oracle::cycle(5)), NotPermutationGraph);
}

TEST_CASE("poset-side characterization") {
  const Realizer ex(Permutation::identity(6), Permutation({5, 4, 6, 1, 3, 2}));
  CHECK_FALSE(is_cm_poset_dim2(example(), ex));
  CHECK(is_cm_poset_dim2(Poset::antichain(3), Realizer(Permutation::identity(3), Permutation({3, 2, 1}))));
  CHECK(is_cm_poset_dim2(Poset::chain(3), Realizer(Permutation::identity(3), Permutation::identity(3))));
  CHECK_THROWS_AS(is_cm_poset_dim2(Poset::chain(3), Realizer(Permutation::identity(3), Permutation({3, 2, 1}))),
                  std::invalid_argument);

  CHECK(level_connectivity_all_pairs(Poset::chain(4)));
  CHECK_FALSE(level_connectivity_all_pairs(example()));
  CHECK_THROWS_AS(level_connectivity_all_pairs(Poset::from_relation(4, {{1, 2}, {1, 3}, {3, 4}})),
                  std::invalid_argument);

  const auto rec = recognize_permutation_graph(kFig4);
  REQUIRE(rec.realizer);
  const auto norm = normalize_realizer(*rec.realizer);
  CHECK(level_connectivity_all_pairs(poset_from_realizer(norm.realizer)));
}

TEST_CASE("levels as clique partition") {
  CHECK(sorted_parts(levels_to_clique_partition(example())) == std::vector<VertexSet>{{1, 4, 5}, {2, 3, 6}});
  CHECK(levels_to_clique_partition(Poset::antichain(3)).parts == std::vector<VertexSet>{{1, 2, 3}});
  CHECK(levels_to_clique_partition(Poset::chain(3)).parts == std::vector<VertexSet>{{1}, {2}, {3}});
  CHECK_THROWS_AS(levels_to_clique_partition(Poset::from_relation(4, {{1, 2}, {1, 3}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("chained non-edge structure") {
  CHECK(verify_prop33_structure(kFig3, levels_to_clique_partition(example())));
  CHECK(verify_prop33_structure(kFig1, {{{1, 2, 5}, {3, 4}}}));
  CHECK(verify_prop33_structure(oracle::cycle(4), {{{1, 2}, {3, 4}}}));
  CHECK_THROWS_AS(verify_prop33_structure(kFig1, {{{1, 2}, {3, 4}, {5}}}), std::invalid_argument);

  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const Poset p = poset_from_realizer(Realizer(Permutation::identity(n), pi));
      if (!heights(p).pure) continue;
      REQUIRE(verify_prop33_structure(perm_graph_id(pi), levels_to_clique_partition(p)));
    }
  }
}

TEST_CASE("simplicial sufficient condition") {
  CHECK(simplicial_sufficient(kFig1, {{{1, 2, 5}, {3, 4}}}));
  CHECK_FALSE(simplicial_sufficient(kFig4, {{{1, 2}, {3, 4}, {5, 6}, {7, 8}}}));
  CHECK(is_cm_permutation(kFig4).cm);
  CHECK(simplicial_sufficient(Graph::complete(5), {{{1, 2, 3, 4, 5}}}));
}

TEST_CASE("graph side and poset side agree for every Id-realizer up to n = 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : oracle::all_permutations(n)) {
      const Realizer r(Permutation::identity(n), pi);
      const Poset p = poset_from_realizer(r);
      const Graph g = perm_graph_id(pi);
      const auto verdict = is_cm_permutation(g);
      REQUIRE(verdict.cm == is_cm_poset_dim2(p, r));
      if (heights(p).pure) {
        bool consecutive = true;
        const auto d = heights(p);
        for (int i = 0; i < d.rank; ++i) consecutive = consecutive && is_connected_poset(level_subposet(p, i, i + 1).poset);
        REQUIRE(consecutive == level_connectivity_all_pairs(p));
      }
      if (verdict.reason != CmReason::not_well_covered && verdict.reason != CmReason::antichain_or_trivial) {
        for (const auto& part : verdict.partitions_found) {
          if (simplicial_sufficient(g, part)) REQUIRE(verdict.cm);
        }
      }
    }
  }
}

TEST_CASE("verdict labels") {
  CHECK(to_string(CmReason::not_well_covered) == "not_well_covered");
  CHECK(to_string(CmReason::multiple_partitions) == "multiple_partitions");
  CHECK(to_string(CmReason::unique_partition) == "unique_partition");
  CHECK(to_string(CmReason::antichain_or_trivial) == "antichain_or_trivial");
}
