#pragma once

#include <optional>
#include <vector>

#include "cmperm/graph.hpp"
#include "cmperm/homology.hpp"
#include "cmperm/poset.hpp"

namespace cmperm {

/// Facets are the maximal independent sets. On zero vertices this is the
/// complex whose only face is empty.
SimplicialComplex independence_complex(const Graph& g);

/// Facets are the maximal chains, found by walking cover relations.
SimplicialComplex order_complex(const Poset& p);

/// Faces disjoint from `face` whose union with it is a face.
/// Throws std::invalid_argument when `face` is not in c.
SimplicialComplex link(const SimplicialComplex& c, const VertexSet& face);

struct ReisnerWitness {
  VertexSet face;
  int dimension = 0;
  Field field = Field::F2;
};

struct ReisnerVerdict {
  bool cm = true;
  std::vector<Field> fields;
  /// First failing (face, dimension, field): faces in lexicographic order,
  /// then dimension ascending, then fields in the order given.
  std::optional<ReisnerWitness> witness;
};

inline const std::vector<Field> kDefaultFields{Field::F2, Field::Q};

/// Reisner's criterion: for every face s, including the empty one, reduced
/// homology of link(s) vanishes below dim link(s), over each listed field.
ReisnerVerdict reisner_cm(const SimplicialComplex& c, const std::vector<Field>& fields,
                          std::size_t face_cap = kDefaultFaceCap);

ReisnerVerdict oracle_cm_graph(const Graph& g, const std::vector<Field>& fields = kDefaultFields,
                               std::size_t face_cap = kDefaultFaceCap);

inline bool oracle_is_cm_graph(const Graph& g, const std::vector<Field>& fields = kDefaultFields,
                               std::size_t face_cap = kDefaultFaceCap) {
  return oracle_cm_graph(g, fields, face_cap).cm;
}

}  // namespace cmperm
