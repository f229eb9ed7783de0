#include "cmperm/reisner.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmperm {

SimplicialComplex independence_complex(const Graph& g) {
  if (g.n() == 0) return SimplicialComplex::from_facets(0, {VertexSet{}});
  return SimplicialComplex::from_facets(g.n(), maximal_independent_sets(g));
}

namespace {

void extend_chains(const Poset& p, const std::vector<VertexSet>& up, VertexSet& chain,
                   std::vector<VertexSet>& out) {
  const auto& next = up[static_cast<std::size_t>(chain.back() - 1)];
  if (next.empty()) {
    out.push_back(chain);
    return;
  }
  for (Vertex y : next) {
    chain.push_back(y);
    extend_chains(p, up, chain, out);
    chain.pop_back();
  }
}

}  // namespace

SimplicialComplex order_complex(const Poset& p) {
  if (p.n() == 0) return SimplicialComplex::from_facets(0, {VertexSet{}});
  std::vector<VertexSet> up(static_cast<std::size_t>(p.n()));
  for (auto [x, y] : p.cover_relations()) up[static_cast<std::size_t>(x - 1)].push_back(y);
  std::vector<VertexSet> chains;
  for (Vertex m : p.minimal_elements()) {
    VertexSet chain{m};
    extend_chains(p, up, chain, chains);
  }
  return SimplicialComplex::from_facets(p.n(), std::move(chains));
}

SimplicialComplex link(const SimplicialComplex& c, const VertexSet& face) {
  VertexSet s = face;
  std::sort(s.begin(), s.end());
  if (!c.contains(s)) throw std::invalid_argument("link: face not in complex");
  std::vector<VertexSet> rest;
  for (const auto& f : c.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    VertexSet diff;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(diff));
    rest.push_back(std::move(diff));
  }
  return SimplicialComplex::from_facets(c.n(), std::move(rest));
}

ReisnerVerdict reisner_cm(const SimplicialComplex& c, const std::vector<Field>& fields,
                          std::size_t face_cap) {
  ReisnerVerdict verdict;
  verdict.fields = fields;
  for (const auto& face : all_faces(c, face_cap)) {
    const auto lk = link(c, face);
    std::vector<HomologyProfile> profiles;
    profiles.reserve(fields.size());
    for (Field f : fields) profiles.push_back(reduced_homology_ranks(lk, f, face_cap));
    for (int k = -1; k < lk.dimension(); ++k) {
      for (const auto& prof : profiles) {
        if (prof.rank(k) != 0) {
          verdict.cm = false;
          verdict.witness = ReisnerWitness{face, k, prof.field};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

ReisnerVerdict oracle_cm_graph(const Graph& g, const std::vector<Field>& fields,
                               std::size_t face_cap) {
  return reisner_cm(independence_complex(g), fields, face_cap);
}

}  // namespace cmperm
