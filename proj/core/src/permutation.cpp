#include "cmperm/permutation.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace cmperm {

Permutation::Permutation(std::vector<Vertex> seq) : seq_(std::move(seq)) {
  const int n = static_cast<int>(seq_.size());
  pos_.assign(seq_.size(), 0);
  for (int p = 0; p < n; ++p) {
    const Vertex label = seq_[static_cast<std::size_t>(p)];
    if (label < 1 || label > n) {
      throw std::invalid_argument("permutation: label " + std::to_string(label) +
                                  " outside 1.." + std::to_string(n));
    }
    int& slot = pos_[static_cast<std::size_t>(label - 1)];
    if (slot != 0) {
      throw std::invalid_argument("permutation: label " + std::to_string(label) +
                                  " repeated");
    }
    slot = p + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(seq));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < seq_.size(); ++i)
    if (seq_[i] != static_cast<Vertex>(i + 1)) return false;
  return true;
}

Permutation Permutation::inverse() const { return Permutation(pos_); }

Realizer::Realizer(Permutation l1, Permutation l2)
    : l1_(std::move(l1)), l2_(std::move(l2)) {
  if (l1_.size() != l2_.size()) {
    throw std::invalid_argument("realizer: permutations of different length (" +
                                std::to_string(l1_.size()) + " vs " +
                                std::to_string(l2_.size()) + ")");
  }
}

Graph perm_graph(const Realizer& r) {
  const int n = r.size();
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      const bool before1 = r.l1().position(i) < r.l1().position(j);
      const bool before2 = r.l2().position(i) < r.l2().position(j);
      if (before1 != before2) edges.emplace_back(i, j);
    }
  }
  return Graph::make(n, edges);
}

Graph perm_graph_id(const Permutation& pi) {
  return perm_graph(Realizer(Permutation::identity(pi.size()), pi));
}

std::size_t inversion_count(const std::vector<int>& seq) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Orientation

Orientation Orientation::from_arcs(int n, std::vector<Edge> arcs) {
  Orientation o;
  o.n_ = n;
  o.dir_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (auto [u, v] : arcs) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) {
      throw std::invalid_argument("orientation: bad arc (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    }
    if (o.dir_[o.index(v, u)]) {
      throw std::invalid_argument("orientation: pair {" + std::to_string(u) +
                                  "," + std::to_string(v) +
                                  "} oriented both ways");
    }
    o.dir_[o.index(u, v)] = 1;
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  o.arcs_ = std::move(arcs);
  return o;
}

bool Orientation::orients(const Graph& g) const {
  if (g.n() != n_ || g.edge_count() != arcs_.size()) return false;
  for (auto [u, v] : g.edges())
    if (has_arc(u, v) == has_arc(v, u)) return false;
  return true;
}

bool Orientation::is_transitive() const {
  for (auto [a, b] : arcs_)
    for (Vertex c = 1; c <= n_; ++c)
      if (has_arc(b, c) && !has_arc(a, c)) return false;
  return true;
}

Orientation Orientation::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(arcs_.size());
  for (auto [u, v] : arcs_) rev.emplace_back(v, u);
  return from_arcs(n_, std::move(rev));
}

// ---------------------------------------------------------------------------
// Transitive orientation by implication classes.
//
// Repeatedly pick the least remaining edge, orient it low->high and close it
// under forcing within the remaining edge set: arc (x,y) forces (x,w) when
// x-w remains and y-w does not, and (w,y) when w-y remains and x-w does not.
// A class containing both directions of a pair means g is not a comparability
// graph. Each finished class is removed before the next one is built.

std::optional<Orientation> transitive_orientation(const Graph& g) {
  const int n = g.n();
  const auto idx = [n](Vertex u, Vertex v) {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(v - 1);
  };
  std::vector<unsigned char> remaining(static_cast<std::size_t>(n) *
                                       static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) remaining[idx(u, v)] = remaining[idx(v, u)] = 1;

  std::vector<int> class_of(remaining.size(), 0);
  std::vector<Edge> arcs;
  arcs.reserve(g.edge_count());
  int class_id = 0;

  for (auto [a, b] : g.edges()) {
    if (!remaining[idx(a, b)]) continue;
    ++class_id;
    std::vector<Edge> members;
    std::vector<Edge> stack;
    bool conflict = false;
    const auto add = [&](Vertex u, Vertex v) {
      if (class_of[idx(u, v)] == class_id) return;
      if (class_of[idx(v, u)] == class_id) {
        conflict = true;
        return;
      }
      class_of[idx(u, v)] = class_id;
      members.emplace_back(u, v);
      stack.emplace_back(u, v);
    };
    add(a, b);
    while (!stack.empty() && !conflict) {
      auto [x, y] = stack.back();
      stack.pop_back();
      for (Vertex w = 1; w <= n && !conflict; ++w) {
        if (w != y && w != x && remaining[idx(x, w)] && !remaining[idx(y, w)])
          add(x, w);
        if (w != x && w != y && remaining[idx(w, y)] && !remaining[idx(x, w)])
          add(w, y);
      }
    }
    if (conflict) return std::nullopt;
    for (auto [u, v] : members) {
      remaining[idx(u, v)] = remaining[idx(v, u)] = 0;
      arcs.emplace_back(u, v);
    }
  }

  auto orientation = Orientation::from_arcs(n, std::move(arcs));
  if (!orientation.orients(g) || !orientation.is_transitive()) {
    throw std::logic_error(
        "transitive_orientation: implication classes produced an invalid "
        "orientation");
  }
  return orientation;
}

namespace {

class OrientationCounter {
 public:
  explicit OrientationCounter(const Graph& g)
      : g_(g),
        n_(g.n()),
        dir_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {}

  std::size_t run() {
    count_ = 0;
    descend(0);
    return count_;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }
  bool arc(Vertex u, Vertex v) const { return dir_[idx(u, v)] != 0; }

  // Checks every transitivity triple that the fresh arc u->v completes.
  bool consistent(Vertex u, Vertex v) const {
    for (Vertex w = 1; w <= n_; ++w) {
      if (w == u || w == v) continue;
      if (arc(w, u) && (!g_.adjacent(w, v) || arc(v, w))) return false;
      if (arc(v, w) && (!g_.adjacent(u, w) || arc(w, u))) return false;
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == g_.edge_count()) {
      ++count_;
      return;
    }
    const auto [a, b] = g_.edges()[k];
    for (const Edge& e : {Edge{a, b}, Edge{b, a}}) {
      const auto [u, v] = e;
      dir_[idx(u, v)] = 1;
      if (consistent(u, v)) descend(k + 1);
      dir_[idx(u, v)] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<unsigned char> dir_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t count_transitive_orientations(const Graph& g, std::size_t edge_cap) {
  if (g.edge_count() > edge_cap) {
    throw CapExceeded("count_transitive_orientations: " +
                      std::to_string(g.edge_count()) + " edges exceeds cap " +
                      std::to_string(edge_cap));
  }
  return OrientationCounter(g).run();
}

std::string_view to_string(RecognitionOutcome o) {
  switch (o) {
    case RecognitionOutcome::permutation:
      return "permutation";
    case RecognitionOutcome::not_comparability:
      return "not_comparability";
    case RecognitionOutcome::not_cocomparability:
      return "not_cocomparability";
  }
  return "unknown";
}

std::optional<Permutation> topological_order(int n, const std::vector<Edge>& arcs) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) + 1);
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : arcs) {
    out[static_cast<std::size_t>(u)].push_back(v);
    ++indegree[static_cast<std::size_t>(v)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v)
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[static_cast<std::size_t>(v)])
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return Permutation(std::move(order));
}

RecognitionResult recognize_permutation_graph(const Graph& g) {
  RecognitionResult result;
  result.orientation = transitive_orientation(g);
  if (!result.orientation) {
    result.outcome = RecognitionOutcome::not_comparability;
    return result;
  }
  result.complement_orientation = transitive_orientation(complement(g));
  if (!result.complement_orientation) {
    result.outcome = RecognitionOutcome::not_cocomparability;
    return result;
  }

  // F + F' and F^-1 + F' are both linear orders; they agree exactly on the
  // non-edges of g, so their crossing pairs are the edges of g.
  const auto& f = *result.orientation;
  const auto& fc = *result.complement_orientation;
  std::vector<Edge> first = fc.arcs();
  std::vector<Edge> second = fc.arcs();
  for (auto [u, v] : f.arcs()) {
    first.emplace_back(u, v);
    second.emplace_back(v, u);
  }
  auto l1 = topological_order(g.n(), first);
  auto l2 = topological_order(g.n(), second);
  if (!l1 || !l2) {
    throw std::logic_error("recognize_permutation_graph: realizer order is cyclic");
  }
  Realizer realizer(std::move(*l1), std::move(*l2));
  if (!(perm_graph(realizer) == g)) {
    throw std::logic_error(
        "recognize_permutation_graph: realizer does not regenerate the input");
  }
  result.outcome = RecognitionOutcome::permutation;
  result.realizer = std::move(realizer);
  return result;
}

}  // namespace cmperm
