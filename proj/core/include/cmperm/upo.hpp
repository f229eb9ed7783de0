#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cmperm/graph.hpp"
#include "cmperm/permutation.hpp"
#include "cmperm/poset.hpp"

namespace cmperm {

/// Every vertex outside k is adjacent to all of k or to none of it.
bool is_partitive(const Graph& g, const VertexSet& k);

inline constexpr int kDefaultPartitiveVertexBound = 20;

/// Calls `visit` on each partitive K with 2 <= |K| <= n - 1 in lexicographic
/// order until it returns false. Throws CapExceeded when n > vertex_bound.
void for_each_nontrivial_partitive(const Graph& g,
                                   const std::function<bool(const VertexSet&)>& visit,
                                   int vertex_bound = kDefaultPartitiveVertexBound);

/// The first `cap` nontrivial partitive subsets in lexicographic order.
std::vector<VertexSet> nontrivial_partitive_subsets(
    const Graph& g, std::size_t cap = static_cast<std::size_t>(-1),
    int vertex_bound = kDefaultPartitiveVertexBound);

enum class UpoMethod { trotter, degenerate };

std::string_view to_string(UpoMethod m);

struct UpoVerdict {
  bool upo = true;
  UpoMethod method = UpoMethod::degenerate;
  /// Nontrivial partitive set containing an edge; present iff !upo.
  std::optional<VertexSet> violator;
};

class NotComparabilityGraph : public std::invalid_argument {
 public:
  NotComparabilityGraph() : std::invalid_argument("not a comparability graph") {}
};

/// Uniquely-partially-orderable test. Connected graphs use the criterion
/// "every nontrivial partitive subset is independent"; a disconnected graph
/// is UPO iff at most one component has an edge and that component is UPO.
/// Throws NotComparabilityGraph when g has no transitive orientation.
UpoVerdict is_upo(const Graph& g, int vertex_bound = kDefaultPartitiveVertexBound);

/// Pure, every level pair (i, j) connected, and not an ordinal sum.
bool thm12_hypotheses(const Poset& p);

/// Orientation-counting cross-check: an edgeless graph is UPO; otherwise UPO
/// iff there are exactly two transitive orientations (one order and its dual).
/// Throws NotComparabilityGraph or CapExceeded.
bool upo_orientation_oracle(const Graph& g,
                            std::size_t edge_cap = kDefaultOrientationEdgeCap);

}  // namespace cmperm
