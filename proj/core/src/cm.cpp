#include "cmperm/cm.hpp"

#include <algorithm>
#include <string>

namespace cmperm {

void validate_clique_partition(const Graph& g, const CliquePartition& part) {
  std::vector<int> owner(static_cast<std::size_t>(g.n()) + 1, -1);
  const auto cliques = maximal_cliques(g);
  for (std::size_t i = 0; i < part.parts.size(); ++i) {
    const auto& p = part.parts[i];
    for (Vertex v : p) {
      if (!g.contains(v)) {
        throw std::invalid_argument("clique partition: label " + std::to_string(v) +
                                    " out of range");
      }
      if (owner[static_cast<std::size_t>(v)] != -1) {
        throw std::invalid_argument("clique partition: vertex " + std::to_string(v) +
                                    " in two parts");
      }
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    VertexSet sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (!std::binary_search(cliques.begin(), cliques.end(), sorted)) {
      throw std::invalid_argument("clique partition: part " + std::to_string(i) +
                                  " is not a maximal clique");
    }
  }
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (owner[static_cast<std::size_t>(v)] == -1) {
      throw std::invalid_argument("clique partition: vertex " + std::to_string(v) +
                                  " uncovered");
    }
  }
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::size_t r, std::size_t limit)
      : g_(g), r_(r), limit_(limit), cliques_(maximal_cliques(g)),
        covered_(static_cast<std::size_t>(g.n()) + 1, 0),
        by_vertex_(static_cast<std::size_t>(g.n()) + 1) {
    // cliques_ is lexicographic, so each bucket is too.
    for (std::size_t c = 0; c < cliques_.size(); ++c)
      for (Vertex v : cliques_[c]) by_vertex_[static_cast<std::size_t>(v)].push_back(c);
  }

  std::vector<CliquePartition> run() {
    if (limit_ > 0) descend(1);
    return std::move(found_);
  }

 private:
  void descend(Vertex from) {
    Vertex v = from;
    while (v <= g_.n() && covered_[static_cast<std::size_t>(v)]) ++v;
    if (v > g_.n()) {
      if (chosen_.size() == r_) {
        CliquePartition p;
        for (std::size_t c : chosen_) p.parts.push_back(cliques_[c]);
        found_.push_back(std::move(p));
      }
      return;
    }
    if (chosen_.size() == r_) return;
    for (std::size_t c : by_vertex_[static_cast<std::size_t>(v)]) {
      const auto& clique = cliques_[c];
      if (std::any_of(clique.begin(), clique.end(),
                      [&](Vertex w) { return covered_[static_cast<std::size_t>(w)] != 0; }))
        continue;
      for (Vertex w : clique) covered_[static_cast<std::size_t>(w)] = 1;
      chosen_.push_back(c);
      descend(v + 1);
      chosen_.pop_back();
      for (Vertex w : clique) covered_[static_cast<std::size_t>(w)] = 0;
      if (found_.size() >= limit_) return;
    }
  }

  const Graph& g_;
  std::size_t r_;
  std::size_t limit_;
  std::vector<VertexSet> cliques_;
  std::vector<unsigned char> covered_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::size_t> chosen_;
  std::vector<CliquePartition> found_;
};

}  // namespace

std::vector<CliquePartition> clique_partitions(const Graph& g, std::size_t r,
                                               std::size_t limit) {
  if (g.n() == 0) {
    if (r == 0 && limit > 0) return {CliquePartition{}};
    return {};
  }
  return PartitionSearch(g, r, limit).run();
}

std::string_view to_string(CmReason reason) {
  switch (reason) {
    case CmReason::not_well_covered:
      return "not_well_covered";
    case CmReason::multiple_partitions:
      return "multiple_partitions";
    case CmReason::unique_partition:
      return "unique_partition";
    case CmReason::antichain_or_trivial:
      return "antichain_or_trivial";
  }
  return "unknown";
}

NotPermutationGraph::NotPermutationGraph(RecognitionResult result)
    : std::invalid_argument("not a permutation graph (" +
                            std::string(to_string(result.outcome)) + ")"),
      result_(std::move(result)) {}

CmVerdict is_cm_permutation(const Graph& g) {
  auto recognition = recognize_permutation_graph(g);
  if (recognition.outcome != RecognitionOutcome::permutation) {
    throw NotPermutationGraph(std::move(recognition));
  }

  CmVerdict verdict;
  const std::size_t n = static_cast<std::size_t>(g.n());
  const std::size_t all_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;

  // Complete graph (antichain poset) and edgeless graph (chain poset).
  if (g.edge_count() == all_pairs) {
    verdict.cm = true;
    verdict.reason = CmReason::antichain_or_trivial;
    verdict.r = n > 0 ? 1 : 0;
    if (n > 0) verdict.partitions_found.push_back({{g.vertices()}});
    return verdict;
  }
  if (g.edge_count() == 0) {
    verdict.cm = true;
    verdict.reason = CmReason::antichain_or_trivial;
    verdict.r = n;
    CliquePartition singletons;
    for (Vertex v = 1; v <= g.n(); ++v) singletons.parts.push_back({v});
    verdict.partitions_found.push_back(std::move(singletons));
    return verdict;
  }

  const auto wc = is_well_covered(g);
  verdict.r = wc.r;
  if (!wc.well_covered) {
    verdict.cm = false;
    verdict.reason = CmReason::not_well_covered;
    return verdict;
  }

  verdict.partitions_found = clique_partitions(g, wc.r, 2);
  switch (verdict.partitions_found.size()) {
    case 1:
      verdict.cm = true;
      verdict.reason = CmReason::unique_partition;
      break;
    case 2:
      verdict.cm = false;
      verdict.reason = CmReason::multiple_partitions;
      break;
    default:
      // The level sets of the underlying pure poset always give one.
      throw std::logic_error("is_cm_permutation: well-covered permutation graph has no "
                             "partition into r maximal cliques");
  }
  return verdict;
}

namespace {

bool level_pair_connected(const Poset& p, const LevelDecomposition& d, int i, int j) {
  VertexSet s = d.levels[static_cast<std::size_t>(i)];
  const auto& upper = d.levels[static_cast<std::size_t>(j)];
  s.insert(s.end(), upper.begin(), upper.end());
  return is_connected_poset(induced_subposet(p, s).poset);
}

}  // namespace

bool is_cm_poset_dim2(const Poset& p, const Realizer& r) {
  if (!(poset_from_realizer(r) == p)) {
    throw std::invalid_argument("is_cm_poset_dim2: realizer does not realize the poset");
  }
  if (p.is_antichain()) return true;
  const auto d = heights(p);
  if (!d.pure) return false;
  for (int i = 0; i < d.rank; ++i)
    if (!level_pair_connected(p, d, i, i + 1)) return false;
  return true;
}

bool level_connectivity_all_pairs(const Poset& p) {
  const auto d = heights(p);
  if (!d.pure) throw std::invalid_argument("level_connectivity_all_pairs: poset is not pure");
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j <= d.rank; ++j)
      if (!level_pair_connected(p, d, i, j)) return false;
  return true;
}

CliquePartition levels_to_clique_partition(const Poset& p) {
  const auto d = heights(p);
  if (!d.pure) throw std::invalid_argument("levels_to_clique_partition: poset is not pure");
  CliquePartition part{d.levels};
  try {
    validate_clique_partition(cocomparability_graph(p), part);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("levels_to_clique_partition: ") + e.what());
  }
  return part;
}

bool verify_prop33_structure(const Graph& g, const CliquePartition& part) {
  validate_clique_partition(g, part);
  const auto& parts = part.parts;
  const std::size_t k = parts.size();
  std::vector<std::size_t> part_of(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : parts[i]) part_of[static_cast<std::size_t>(v)] = i;

  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex x : parts[i]) {
      // Vertices reachable from x by non-edges stepping one part at a time.
      VertexSet frontier{x};
      for (std::size_t j = i + 1; j < k; ++j) {
        VertexSet next;
        for (Vertex z : parts[j])
          if (std::any_of(frontier.begin(), frontier.end(),
                          [&](Vertex w) { return !g.adjacent(w, z); }))
            next.push_back(z);
        for (Vertex y : parts[j]) {
          const bool chained = std::find(next.begin(), next.end(), y) != next.end();
          if (chained == g.adjacent(x, y)) return false;
        }
        frontier = std::move(next);
      }
    }
  }
  return true;
}

bool simplicial_sufficient(const Graph& g, const CliquePartition& part) {
  validate_clique_partition(g, part);
  const auto simplicial = simplicial_vertices(g);
  const auto has_simplicial = [&](const VertexSet& s) {
    return std::any_of(s.begin(), s.end(), [&](Vertex v) {
      return std::binary_search(simplicial.begin(), simplicial.end(), v);
    });
  };
  for (const auto& comp : connected_components(g)) {
    int without = 0;
    for (const auto& p : part.parts) {
      if (p.empty() || !std::binary_search(comp.begin(), comp.end(), p.front())) continue;
      if (!has_simplicial(p)) ++without;
    }
    if (without > 1) return false;
  }
  return true;
}

}  // namespace cmperm
