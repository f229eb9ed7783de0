#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cmperm/graph.hpp"
#include "cmperm/permutation.hpp"
#include "cmperm/poset.hpp"

namespace cmperm {

/// Partition of the vertex set into maximal cliques of the ambient graph.
struct CliquePartition {
  std::vector<VertexSet> parts;

  friend bool operator==(const CliquePartition&, const CliquePartition&) = default;
};

/// Throws std::invalid_argument unless the parts are pairwise disjoint, cover
/// 1..n, and are each a maximal clique of g.
void validate_clique_partition(const Graph& g, const CliquePartition& part);

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Up to `limit` partitions of V(g) into exactly r maximal cliques.
///
/// Exact-cover backtracking over the maximal cliques: the least uncovered
/// vertex is covered next, trying its cliques in lexicographic order, so the
/// output order is deterministic. Parts within a partition are sorted.
std::vector<CliquePartition> clique_partitions(const Graph& g, std::size_t r,
                                               std::size_t limit = kUnlimited);

enum class CmReason { not_well_covered, multiple_partitions, unique_partition, antichain_or_trivial };

std::string_view to_string(CmReason reason);

struct CmVerdict {
  bool cm = false;
  CmReason reason = CmReason::not_well_covered;
  /// At most two partitions; two exactly when reason is multiple_partitions.
  std::vector<CliquePartition> partitions_found;
  std::size_t r = 0;
};

class NotPermutationGraph : public std::invalid_argument {
 public:
  explicit NotPermutationGraph(RecognitionResult result);
  const RecognitionResult& recognition() const { return result_; }

 private:
  RecognitionResult result_;
};

/// Cohen-Macaulay test for permutation graphs: well covered and a unique
/// partition into r maximal cliques. Throws NotPermutationGraph otherwise.
CmVerdict is_cm_permutation(const Graph& g);

/// Poset side: antichain, or pure with every pair of consecutive levels
/// inducing a connected subposet. Throws std::invalid_argument when p is not
/// the poset of r.
bool is_cm_poset_dim2(const Poset& p, const Realizer& r);

/// Connectivity of every level pair (i, j), i < j. Throws on a non-pure poset.
bool level_connectivity_all_pairs(const Poset& p);

/// The level sets as a clique partition of the cocomparability graph.
/// Throws std::invalid_argument on a non-pure poset and std::logic_error if a
/// level fails to be a maximal clique.
CliquePartition levels_to_clique_partition(const Poset& p);

/// For parts Y_0..Y_k in the given order: a non-edge joins x in Y_i and y in
/// Y_j (i < j) exactly when a path x = x_i, ..., x_j = y through consecutive
/// parts uses only non-edges.
bool verify_prop33_structure(const Graph& g, const CliquePartition& part);

/// At most one part without a simplicial vertex in each connected component.
bool simplicial_sufficient(const Graph& g, const CliquePartition& part);

}  // namespace cmperm
