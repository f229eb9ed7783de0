#include "cmperm/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace cmperm {

namespace {

std::size_t cell(int n, Vertex x, Vertex y) {
  return static_cast<std::size_t>(x - 1) * static_cast<std::size_t>(n) +
         static_cast<std::size_t>(y - 1);
}

}  // namespace

Poset Poset::from_relation(int n, const std::vector<Relation>& pairs) {
  if (n < 0) throw std::invalid_argument("poset: negative element count");
  std::vector<unsigned char> lt(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n) {
      throw std::invalid_argument("poset: pair (" + std::to_string(x) + "," +
                                  std::to_string(y) + ") out of range");
    }
    if (x == y) {
      throw std::invalid_argument("poset: cycle through " + std::to_string(x));
    }
    lt[cell(n, x, y)] = 1;
  }
  // Warshall closure.
  for (Vertex k = 1; k <= n; ++k)
    for (Vertex i = 1; i <= n; ++i)
      if (lt[cell(n, i, k)])
        for (Vertex j = 1; j <= n; ++j)
          if (lt[cell(n, k, j)]) lt[cell(n, i, j)] = 1;
  for (Vertex i = 1; i <= n; ++i) {
    if (lt[cell(n, i, i)]) {
      throw std::invalid_argument("poset: cycle through " + std::to_string(i));
    }
  }
  return from_table(n, std::move(lt));
}

Poset Poset::from_table(int n, std::vector<unsigned char> lt) {
  if (n < 0 || lt.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("poset: relation table has wrong size");
  }
  for (auto& c : lt) c = c ? 1 : 0;
  for (Vertex x = 1; x <= n; ++x) {
    if (lt[cell(n, x, x)]) throw std::invalid_argument("poset: relation is reflexive");
    for (Vertex y = 1; y <= n; ++y) {
      if (!lt[cell(n, x, y)]) continue;
      if (lt[cell(n, y, x)]) throw std::invalid_argument("poset: relation is not antisymmetric");
      for (Vertex z = 1; z <= n; ++z)
        if (lt[cell(n, y, z)] && !lt[cell(n, x, z)])
          throw std::invalid_argument("poset: relation is not transitive");
    }
  }
  Poset p;
  p.n_ = n;
  p.lt_ = std::move(lt);
  return p;
}

Poset Poset::chain(int n) {
  std::vector<Relation> pairs;
  for (Vertex i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
  return from_relation(n, pairs);
}

Poset Poset::antichain(int n) { return from_relation(n, {}); }

bool Poset::covers(Vertex x, Vertex y) const {
  if (!less(x, y)) return false;
  for (Vertex z = 1; z <= n_; ++z)
    if (less(x, z) && less(z, y)) return false;
  return true;
}

std::vector<Relation> Poset::relations() const {
  std::vector<Relation> out;
  for (Vertex x = 1; x <= n_; ++x)
    for (Vertex y = 1; y <= n_; ++y)
      if (less(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<Relation> Poset::cover_relations() const {
  std::vector<Relation> out;
  for (Vertex x = 1; x <= n_; ++x)
    for (Vertex y = 1; y <= n_; ++y)
      if (covers(x, y)) out.emplace_back(x, y);
  return out;
}

bool Poset::is_antichain() const {
  return std::none_of(lt_.begin(), lt_.end(), [](unsigned char c) { return c != 0; });
}

VertexSet Poset::minimal_elements() const {
  VertexSet out;
  for (Vertex y = 1; y <= n_; ++y) {
    bool minimal = true;
    for (Vertex x = 1; x <= n_ && minimal; ++x) minimal = !less(x, y);
    if (minimal) out.push_back(y);
  }
  return out;
}

VertexSet Poset::maximal_elements() const {
  VertexSet out;
  for (Vertex x = 1; x <= n_; ++x) {
    bool maximal = true;
    for (Vertex y = 1; y <= n_ && maximal; ++y) maximal = !less(x, y);
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<Vertex> Poset::linear_extension() const {
  std::vector<int> below(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex x = 1; x <= n_; ++x)
    for (Vertex y = 1; y <= n_; ++y)
      if (less(x, y)) ++below[static_cast<std::size_t>(y)];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n_; ++v)
    if (below[static_cast<std::size_t>(v)] == 0) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    const Vertex x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Vertex y = 1; y <= n_; ++y)
      if (less(x, y) && --below[static_cast<std::size_t>(y)] == 0) ready.push(y);
  }
  return order;
}

Poset poset_from_realizer(const Realizer& r) {
  const int n = r.size();
  std::vector<unsigned char> lt(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Vertex x = 1; x <= n; ++x)
    for (Vertex y = 1; y <= n; ++y)
      if (x != y && r.l1().position(x) < r.l1().position(y) &&
          r.l2().position(x) < r.l2().position(y))
        lt[cell(n, x, y)] = 1;
  return Poset::from_table(n, std::move(lt));
}

InducedPoset induced_subposet(const Poset& p, const VertexSet& s) {
  VertexSet labels = s;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (Vertex v : labels) {
    if (v < 1 || v > p.n()) {
      throw std::invalid_argument("induced_subposet: label " + std::to_string(v) +
                                  " out of range");
    }
  }
  const int k = static_cast<int>(labels.size());
  std::vector<unsigned char> lt(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (p.less(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]))
        lt[cell(k, i + 1, j + 1)] = 1;
  return {Poset::from_table(k, std::move(lt)), std::move(labels)};
}

LevelDecomposition heights(const Poset& p) {
  LevelDecomposition d;
  const int n = p.n();
  d.height.assign(static_cast<std::size_t>(n), 0);
  for (Vertex y : p.linear_extension()) {
    int h = 0;
    for (Vertex x = 1; x <= n; ++x)
      if (p.less(x, y)) h = std::max(h, d.height_of(x) + 1);
    d.height[static_cast<std::size_t>(y - 1)] = h;
    d.rank = std::max(d.rank, h);
  }
  if (n > 0) d.levels.assign(static_cast<std::size_t>(d.rank) + 1, {});
  for (Vertex v = 1; v <= n; ++v) d.levels[static_cast<std::size_t>(d.height_of(v))].push_back(v);

  // Every maximal chain has length rank iff each cover step raises the height
  // by exactly one and every maximal element sits at the top level.
  for (auto [x, y] : p.cover_relations())
    if (d.height_of(y) != d.height_of(x) + 1) d.pure = false;
  for (Vertex x : p.maximal_elements())
    if (d.height_of(x) != d.rank) d.pure = false;
  return d;
}

InducedPoset level_subposet(const Poset& p, int i, int j) {
  const auto d = heights(p);
  if (p.n() == 0 || i < 0 || j <= i || j > d.rank) {
    throw std::out_of_range("level_subposet: need 0 <= i < j <= rank (" +
                            std::to_string(d.rank) + "), got i=" + std::to_string(i) +
                            " j=" + std::to_string(j));
  }
  VertexSet s = d.levels[static_cast<std::size_t>(i)];
  const auto& upper = d.levels[static_cast<std::size_t>(j)];
  s.insert(s.end(), upper.begin(), upper.end());
  return induced_subposet(p, s);
}

bool is_connected_poset(const Poset& p) {
  return is_connected(comparability_graph(p));
}

std::optional<OrdinalSplit> ordinal_sum_split(const Poset& p) {
  const int n = p.n();
  const auto order = p.linear_extension();
  // Any lower summand precedes every upper element in every linear
  // extension, so it is a prefix; a prefix of size k is one iff all
  // k * (n - k) crossing pairs are comparable.
  for (int k = 1; k < n; ++k) {
    std::size_t crossing = 0;
    for (int a = 0; a < k; ++a)
      for (int b = k; b < n; ++b)
        if (p.less(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]))
          ++crossing;
    if (crossing == static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k)) {
      OrdinalSplit split;
      split.lower.assign(order.begin(), order.begin() + k);
      split.upper.assign(order.begin() + k, order.end());
      std::sort(split.lower.begin(), split.lower.end());
      std::sort(split.upper.begin(), split.upper.end());
      return split;
    }
  }
  return std::nullopt;
}

Graph comparability_graph(const Poset& p) {
  std::vector<Edge> edges;
  for (Vertex x = 1; x <= p.n(); ++x)
    for (Vertex y = x + 1; y <= p.n(); ++y)
      if (p.comparable(x, y)) edges.emplace_back(x, y);
  return Graph::make(p.n(), edges);
}

Graph cocomparability_graph(const Poset& p) {
  std::vector<Edge> edges;
  for (Vertex x = 1; x <= p.n(); ++x)
    for (Vertex y = x + 1; y <= p.n(); ++y)
      if (!p.comparable(x, y)) edges.emplace_back(x, y);
  return Graph::make(p.n(), edges);
}

Poset dual(const Poset& p) {
  std::vector<Relation> pairs;
  for (auto [x, y] : p.relations()) pairs.emplace_back(y, x);
  return Poset::from_relation(p.n(), pairs);
}

NormalizedRealizer normalize_realizer(const Realizer& r) {
  Permutation relabel = r.l1().inverse();
  std::vector<Vertex> l2;
  l2.reserve(static_cast<std::size_t>(r.size()));
  for (Vertex v : r.l2().seq()) l2.push_back(relabel.at(v));
  return {Realizer(Permutation::identity(r.size()), Permutation(std::move(l2))),
          std::move(relabel)};
}

Graph relabel_graph(const Graph& g, const Permutation& relabel) {
  if (relabel.size() != g.n()) {
    throw std::invalid_argument("relabel_graph: relabelling has wrong length");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(relabel.at(u), relabel.at(v));
  return Graph::make(g.n(), edges);
}

CoverData::CoverData(const Poset& p, const Realizer& normalized) : levels_(heights(p)) {
  if (!levels_.pure) throw std::invalid_argument("cover_data: poset is not pure");
  if (normalized.size() != p.n() || !normalized.l1().is_identity()) {
    throw std::invalid_argument("cover_data: realizer is not normalized");
  }
  if (!(poset_from_realizer(normalized) == p)) {
    throw std::invalid_argument("cover_data: realizer does not realize the poset");
  }
  upper_.assign(static_cast<std::size_t>(p.n()), {});
  for (auto [x, y] : p.cover_relations()) upper_[static_cast<std::size_t>(x - 1)].push_back(y);
  for (const auto& level : levels_.levels) {
    VertexSet ordered = level;
    std::sort(ordered.begin(), ordered.end(), std::greater<>());
    level_order_.push_back(std::move(ordered));
  }
}

Vertex CoverData::min_cover(Vertex x) const {
  const auto& u = upper_covers(x);
  if (u.empty()) {
    throw std::domain_error("cover_data: element " + std::to_string(x) + " has no upper cover");
  }
  return u.back();  // largest integer = least under the level order
}

Vertex CoverData::max_cover(Vertex x) const {
  const auto& u = upper_covers(x);
  if (u.empty()) {
    throw std::domain_error("cover_data: element " + std::to_string(x) + " has no upper cover");
  }
  return u.front();
}

}  // namespace cmperm
