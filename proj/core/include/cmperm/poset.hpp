#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cmperm/graph.hpp"
#include "cmperm/permutation.hpp"

namespace cmperm {

/// Strict relation pair: first < second.
using Relation = std::pair<Vertex, Vertex>;

/**
 * Strict partial order on 1..n stored as a full boolean table.
 *
 * Every factory verifies irreflexivity, antisymmetry and transitivity, so a
 * Poset value is always a valid order.
 */
class Poset {
 public:
  Poset() = default;

  /// Transitive closure of `pairs`. Throws std::invalid_argument on a cycle
  /// or out-of-range label.
  static Poset from_relation(int n, const std::vector<Relation>& pairs);

  /// Wraps an already-closed strict relation (row-major, 0-based, n*n).
  /// Throws std::invalid_argument if it is not a strict partial order.
  static Poset from_table(int n, std::vector<unsigned char> lt);

  static Poset chain(int n);
  static Poset antichain(int n);

  int n() const { return n_; }
  bool less(Vertex x, Vertex y) const { return lt_[index(x, y)] != 0; }
  bool comparable(Vertex x, Vertex y) const { return less(x, y) || less(y, x); }
  /// x is covered by y.
  bool covers(Vertex x, Vertex y) const;

  /// Full strict relation, sorted.
  std::vector<Relation> relations() const;
  /// Cover pairs (x, y) with x covered by y, sorted.
  std::vector<Relation> cover_relations() const;

  bool is_antichain() const;
  VertexSet minimal_elements() const;
  VertexSet maximal_elements() const;

  /// Smallest-label-first linear extension.
  std::vector<Vertex> linear_extension() const;

  const std::vector<unsigned char>& table() const { return lt_; }

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.lt_ == b.lt_;
  }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y - 1);
  }

  int n_ = 0;
  std::vector<unsigned char> lt_;
};

/// x < y iff x precedes y in both orders.
Poset poset_from_realizer(const Realizer& r);

struct InducedPoset {
  Poset poset;
  VertexSet labels;  ///< labels[k] is the original label of element k + 1
};

InducedPoset induced_subposet(const Poset& p, const VertexSet& s);

/// Height of every element (length of the longest chain ending there),
/// the level sets, and purity.
struct LevelDecomposition {
  std::vector<int> height;          ///< indexed by label - 1
  std::vector<VertexSet> levels;    ///< levels[i] = elements of height i
  int rank = 0;
  bool pure = true;

  int height_of(Vertex v) const { return height[static_cast<std::size_t>(v - 1)]; }
};

LevelDecomposition heights(const Poset& p);

/// Induced subposet on the elements of height i and height j.
/// Throws std::out_of_range unless 0 <= i < j <= rank.
InducedPoset level_subposet(const Poset& p, int i, int j);

/// Connectivity of the comparability graph. The empty poset is connected.
bool is_connected_poset(const Poset& p);

struct OrdinalSplit {
  VertexSet lower;
  VertexSet upper;
};

/// A proper split with every lower element below every upper one, taking the
/// shortest such prefix of the smallest-label-first linear extension.
std::optional<OrdinalSplit> ordinal_sum_split(const Poset& p);

Graph comparability_graph(const Poset& p);
Graph cocomparability_graph(const Poset& p);

Poset dual(const Poset& p);

struct NormalizedRealizer {
  Realizer realizer;     ///< l1 is the identity
  Permutation relabel;   ///< relabel.at(old) is the new label of `old`
};

/// Relabels elements by their position in l1.
NormalizedRealizer normalize_realizer(const Realizer& r);

/// Transports a graph along a relabelling: edge {u,v} becomes
/// {relabel.at(u), relabel.at(v)}.
Graph relabel_graph(const Graph& g, const Permutation& relabel);

/**
 * Upper covers and the within-level orders of a pure poset that is the
 * intersection of the identity and one other permutation.
 *
 * Within a level, x precedes y iff x > y as integers. min_cover(x) and
 * max_cover(x) are the extreme upper covers of x under the next level's order.
 */
class CoverData {
 public:
  /// Throws std::invalid_argument when p is not pure, `normalized.l1()` is
  /// not the identity, or p differs from poset_from_realizer(normalized).
  CoverData(const Poset& p, const Realizer& normalized);

  const VertexSet& upper_covers(Vertex x) const {
    return upper_[static_cast<std::size_t>(x - 1)];
  }
  /// Level i listed from least to greatest under its within-level order.
  const std::vector<VertexSet>& level_orders() const { return level_order_; }
  int level_of(Vertex x) const { return levels_.height_of(x); }

  /// Strict within-level order; both elements must share a level.
  static bool level_less(Vertex x, Vertex y) { return x > y; }

  /// Throws std::domain_error when x has no upper cover.
  Vertex min_cover(Vertex x) const;
  Vertex max_cover(Vertex x) const;

 private:
  LevelDecomposition levels_;
  std::vector<VertexSet> upper_;
  std::vector<VertexSet> level_order_;
};

inline CoverData cover_data(const Poset& p, const Realizer& normalized) {
  return CoverData(p, normalized);
}

}  // namespace cmperm
