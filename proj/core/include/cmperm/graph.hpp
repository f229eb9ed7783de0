#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cmperm {

/// Vertex labels are 1-based throughout the library.
using Vertex = int;

/// Sorted, duplicate-free list of labels.
using VertexSet = std::vector<Vertex>;

/// Unordered pair stored as (min, max).
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on the labels 1..n.
 *
 * Immutable once built. Adjacency is kept as a dense n x n byte matrix next
 * to the canonical sorted edge list, so both `adjacent` and edge iteration
 * are cheap at the sizes this library targets.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, collapsing duplicate pairs in either orientation.
  /// Throws std::invalid_argument on a self-loop or out-of-range endpoint.
  static Graph make(int n, const std::vector<Edge>& edges);

  static Graph edgeless(int n);
  static Graph complete(int n);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const {
    return adj_[index(u, v)] != 0;
  }

  VertexSet neighbors(Vertex v) const;
  VertexSet vertices() const;
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<Edge> edges_;
};

Graph complement(const Graph& g);

/// Induced subgraph relabelled to 1..|s|; `labels[k]` is the original label
/// of new vertex k + 1.
struct InducedSubgraph {
  Graph graph;
  VertexSet labels;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// All inclusion-maximal cliques, each sorted, the list in lexicographic
/// order. The graph on zero vertices has no cliques.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Inclusion-maximal independent sets, i.e. maximal cliques of the complement.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

struct WellCovered {
  bool well_covered = true;
  /// Common size of every maximal independent set when well covered,
  /// otherwise the independence number.
  std::size_t r = 0;
  /// Smallest and largest maximal independent set when not well covered.
  std::optional<std::pair<VertexSet, VertexSet>> witness;
};

WellCovered is_well_covered(const Graph& g);

/// Vertices whose neighbourhood induces a clique.
VertexSet simplicial_vertices(const Graph& g);

/// Components sorted by least element, each sorted ascending.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace cmperm
