#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cmperm/graph.hpp"

namespace cmperm {

/// A linear order on 1..n. `seq()[p]` is the label at (0-based) position p.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `seq` is a bijection on 1..n.
  explicit Permutation(std::vector<Vertex> seq);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<Vertex>& seq() const { return seq_; }

  /// Label at 1-based position `p`.
  Vertex at(int p) const { return seq_[static_cast<std::size_t>(p - 1)]; }
  /// 1-based position of `label`.
  int position(Vertex label) const {
    return pos_[static_cast<std::size_t>(label - 1)];
  }

  bool is_identity() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.seq_ == b.seq_;
  }

 private:
  std::vector<Vertex> seq_;
  std::vector<int> pos_;
};

/// Two linear orders on the same label set.
class Realizer {
 public:
  /// Throws std::invalid_argument on a length mismatch.
  Realizer(Permutation l1, Permutation l2);

  const Permutation& l1() const { return l1_; }
  const Permutation& l2() const { return l2_; }
  int size() const { return l1_.size(); }

  friend bool operator==(const Realizer& a, const Realizer& b) {
    return a.l1_ == b.l1_ && a.l2_ == b.l2_;
  }

 private:
  Permutation l1_;
  Permutation l2_;
};

/// Edge {i,j} iff the segments joining i on both lines cross, i.e. the two
/// orders disagree on the pair.
Graph perm_graph(const Realizer& r);

/// perm_graph(identity, pi): edge {i,j}, i < j, iff pi places j before i.
Graph perm_graph_id(const Permutation& pi);

/// Number of pairs i < j with seq[i] > seq[j].
std::size_t inversion_count(const std::vector<int>& seq);

/// A direction for every edge of some graph, as (tail, head) arcs.
class Orientation {
 public:
  Orientation() = default;

  /// Throws std::invalid_argument on out-of-range endpoints, loops, or a
  /// pair listed in both directions.
  static Orientation from_arcs(int n, std::vector<Edge> arcs);

  int n() const { return n_; }
  const std::vector<Edge>& arcs() const { return arcs_; }
  bool has_arc(Vertex tail, Vertex head) const {
    return dir_[index(tail, head)] != 0;
  }

  /// True when every edge of g carries exactly one arc and nothing else does.
  bool orients(const Graph& g) const;

  /// a->b and b->c imply a->c. Plain O(n^3) scan.
  bool is_transitive() const;

  Orientation reversed() const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<unsigned char> dir_;
};

/// Deterministic transitive orientation, or nullopt when g is not a
/// comparability graph.
std::optional<Orientation> transitive_orientation(const Graph& g);

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultOrientationEdgeCap = 20;

/// Exact number of transitive orientations by exhaustive search.
/// Throws CapExceeded when g has more than `edge_cap` edges.
std::size_t count_transitive_orientations(
    const Graph& g, std::size_t edge_cap = kDefaultOrientationEdgeCap);

enum class RecognitionOutcome { permutation, not_comparability, not_cocomparability };

std::string_view to_string(RecognitionOutcome o);

struct RecognitionResult {
  RecognitionOutcome outcome = RecognitionOutcome::not_comparability;
  /// Present iff outcome == permutation; perm_graph(*realizer) == input.
  std::optional<Realizer> realizer;
  /// Transitive orientation of the input, when it has one.
  std::optional<Orientation> orientation;
  /// Transitive orientation of the complement, when it has one.
  std::optional<Orientation> complement_orientation;
};

RecognitionResult recognize_permutation_graph(const Graph& g);

/// Smallest-label-first topological order of the arcs on 1..n; nullopt on a cycle.
std::optional<Permutation> topological_order(int n, const std::vector<Edge>& arcs);

}  // namespace cmperm
