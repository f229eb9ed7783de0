#include "cmperm/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cmperm {

Graph Graph::make(int n, const std::vector<Edge>& edges) {
  if (n < 0) {
    throw std::invalid_argument("graph: negative vertex count");
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("graph: endpoint out of range in edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    }
    if (u == v) {
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(u));
    }
    g.adj_[g.index(u, v)] = 1;
    g.adj_[g.index(v, u)] = 1;
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (g.adjacent(u, v)) g.edges_.emplace_back(u, v);
    }
  }
  return g;
}

Graph Graph::edgeless(int n) { return make(n, {}); }

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return make(n, edges);
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  for (Vertex u = 1; u <= n_; ++u) {
    if (u != v && adjacent(u, v)) out.push_back(u);
  }
  return out;
}

VertexSet Graph::vertices() const {
  VertexSet out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = i + 1;
  return out;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = u + 1; v <= g.n(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::make(g.n(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet labels = s;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (Vertex v : labels) {
    if (!g.contains(v)) {
      throw std::invalid_argument("induced_subgraph: label " +
                                  std::to_string(v) + " out of range");
    }
  }
  std::vector<Edge> edges;
  const int k = static_cast<int>(labels.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(labels[static_cast<std::size_t>(i)],
                     labels[static_cast<std::size_t>(j)]))
        edges.emplace_back(i + 1, j + 1);
  return {Graph::make(k, edges), std::move(labels)};
}

namespace {

// Bron-Kerbosch with Tomita pivoting: branch only on candidates outside the
// pivot's neighbourhood, with the pivot maximising |P ∩ N(u)| over P ∪ X.
void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty()) {
    if (x.empty()) {
      VertexSet clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  Vertex pivot = p.front();
  std::size_t best = 0;
  for (const VertexSet* pool : {&p, &x}) {
    for (Vertex u : *pool) {
      std::size_t hits = static_cast<std::size_t>(std::count_if(
          p.begin(), p.end(), [&](Vertex w) { return g.adjacent(u, w); }));
      if (hits > best || (hits == best && u < pivot)) {
        best = hits;
        pivot = u;
      }
    }
  }
  VertexSet branch;
  for (Vertex v : p)
    if (!g.adjacent(pivot, v)) branch.push_back(v);

  for (Vertex v : branch) {
    VertexSet np, nx;
    for (Vertex w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (Vertex w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n() == 0) return out;
  VertexSet r;
  bron_kerbosch(g, r, g.vertices(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  return maximal_cliques(complement(g));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

WellCovered is_well_covered(const Graph& g) {
  WellCovered result;
  const auto sets = maximal_independent_sets(g);
  if (sets.empty()) return result;

  const VertexSet* smallest = &sets.front();
  const VertexSet* largest = &sets.front();
  for (const auto& s : sets) {
    if (s.size() < smallest->size()) smallest = &s;
    if (s.size() > largest->size()) largest = &s;
  }
  result.r = largest->size();
  if (smallest->size() != largest->size()) {
    result.well_covered = false;
    result.witness = std::make_pair(*smallest, *largest);
  }
  return result;
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 1; v <= g.n(); ++v)
    if (is_clique(g, g.neighbors(v))) out.push_back(v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w = 1; w <= g.n(); ++w) {
        if (!seen[static_cast<std::size_t>(w)] && g.adjacent(comp[head], w)) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace cmperm
