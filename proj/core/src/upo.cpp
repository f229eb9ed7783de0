#include "cmperm/upo.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "cmperm/cm.hpp"

namespace cmperm {

bool is_partitive(const Graph& g, const VertexSet& k) {
  for (Vertex x = 1; x <= g.n(); ++x) {
    if (std::find(k.begin(), k.end(), x) != k.end()) continue;
    const auto hits = std::count_if(k.begin(), k.end(), [&](Vertex y) { return g.adjacent(x, y); });
    if (hits != 0 && static_cast<std::size_t>(hits) != k.size()) return false;
  }
  return true;
}

namespace {

// Lexicographic DFS over subsets with bitmask adjacency. A vertex below the
// current maximum that splits the current set can never join later, and it
// keeps splitting every extension, so that whole subtree is skipped.
class PartitiveScan {
 public:
  PartitiveScan(const Graph& g, const std::function<bool(const VertexSet&)>& visit)
      : n_(g.n()), visit_(visit), adj_(static_cast<std::size_t>(n_) + 1, 0) {
    for (auto [u, v] : g.edges()) {
      adj_[static_cast<std::size_t>(u)] |= bit(v);
      adj_[static_cast<std::size_t>(v)] |= bit(u);
    }
  }

  void run() {
    for (Vertex v = 1; v <= n_ && !stop_; ++v) {
      current_.push_back(v);
      descend(bit(v));
      current_.pop_back();
    }
  }

 private:
  static std::uint32_t bit(Vertex v) { return std::uint32_t{1} << (v - 1); }

  // Outside vertices adjacent to some but not all of `set`.
  std::uint32_t splitters(std::uint32_t set) const {
    std::uint32_t out = 0;
    for (Vertex x = 1; x <= n_; ++x) {
      if (set & bit(x)) continue;
      const std::uint32_t hit = adj_[static_cast<std::size_t>(x)] & set;
      if (hit != 0 && hit != set) out |= bit(x);
    }
    return out;
  }

  void descend(std::uint32_t set) {
    const Vertex top = current_.back();
    const std::uint32_t split = splitters(set);
    const std::uint32_t below_top = bit(top) - 1;
    if (split & below_top) return;
    const std::size_t size = current_.size();
    if (split == 0 && size >= 2 && static_cast<int>(size) <= n_ - 1) {
      if (!visit_(current_)) {
        stop_ = true;
        return;
      }
    }
    for (Vertex v = top + 1; v <= n_ && !stop_; ++v) {
      current_.push_back(v);
      descend(set | bit(v));
      current_.pop_back();
    }
  }

  int n_;
  const std::function<bool(const VertexSet&)>& visit_;
  std::vector<std::uint32_t> adj_;
  VertexSet current_;
  bool stop_ = false;
};

}  // namespace

void for_each_nontrivial_partitive(const Graph& g,
                                   const std::function<bool(const VertexSet&)>& visit,
                                   int vertex_bound) {
  if (g.n() > vertex_bound || g.n() > 31) {
    throw CapExceeded("partitive enumeration: " + std::to_string(g.n()) +
                      " vertices exceeds bound " + std::to_string(vertex_bound));
  }
  PartitiveScan(g, visit).run();
}

std::vector<VertexSet> nontrivial_partitive_subsets(const Graph& g, std::size_t cap,
                                                    int vertex_bound) {
  std::vector<VertexSet> out;
  if (cap == 0) return out;
  for_each_nontrivial_partitive(
      g,
      [&](const VertexSet& k) {
        out.push_back(k);
        return out.size() < cap;
      },
      vertex_bound);
  return out;
}

std::string_view to_string(UpoMethod m) {
  switch (m) {
    case UpoMethod::trotter:
      return "trotter";
    case UpoMethod::degenerate:
      return "degenerate";
  }
  return "unknown";
}

namespace {

std::optional<VertexSet> first_dependent_partitive(const Graph& g, int vertex_bound) {
  std::optional<VertexSet> found;
  for_each_nontrivial_partitive(
      g,
      [&](const VertexSet& k) {
        if (is_independent(g, k)) return true;
        found = k;
        return false;
      },
      vertex_bound);
  return found;
}

}  // namespace

UpoVerdict is_upo(const Graph& g, int vertex_bound) {
  if (!transitive_orientation(g)) throw NotComparabilityGraph();

  UpoVerdict verdict;
  if (g.edge_count() == 0) {
    verdict.method = UpoMethod::degenerate;
    return verdict;
  }
  verdict.method = UpoMethod::trotter;

  std::vector<VertexSet> edged;
  for (auto& comp : connected_components(g))
    if (comp.size() >= 2) edged.push_back(std::move(comp));

  if (edged.size() >= 2) {
    // Each edged component can be reversed on its own. The component itself
    // is partitive (nothing outside touches it) and contains an edge.
    verdict.upo = false;
    verdict.violator = edged.front();
    return verdict;
  }

  const auto& comp = edged.front();
  if (static_cast<int>(comp.size()) == g.n()) {
    verdict.violator = first_dependent_partitive(g, vertex_bound);
  } else {
    // Isolated vertices are adjacent to nothing, so partitive sets of the
    // component are partitive in g.
    const auto sub = induced_subgraph(g, comp);
    if (auto k = first_dependent_partitive(sub.graph, vertex_bound)) {
      VertexSet mapped;
      for (Vertex v : *k) mapped.push_back(sub.labels[static_cast<std::size_t>(v - 1)]);
      verdict.violator = std::move(mapped);
    }
  }
  verdict.upo = !verdict.violator.has_value();
  return verdict;
}

bool thm12_hypotheses(const Poset& p) {
  const auto d = heights(p);
  if (!d.pure) return false;
  if (!level_connectivity_all_pairs(p)) return false;
  return !ordinal_sum_split(p).has_value();
}

bool upo_orientation_oracle(const Graph& g, std::size_t edge_cap) {
  if (g.edge_count() > edge_cap) {
    throw CapExceeded("upo_orientation_oracle: " + std::to_string(g.edge_count()) +
                      " edges exceeds cap " + std::to_string(edge_cap));
  }
  if (g.edge_count() == 0) return true;
  const std::size_t count = count_transitive_orientations(g, edge_cap);
  if (count == 0) throw NotComparabilityGraph();
  return count == 2;
}

}  // namespace cmperm
