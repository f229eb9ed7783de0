#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cmperm/cm.hpp"
#include "cmperm/graph.hpp"
#include "cmperm/permutation.hpp"
#include "cmperm/poset.hpp"
#include "cmperm/reisner.hpp"
#include "cmperm/upo.hpp"

namespace cmperm::io {

/// Malformed or schema-violating input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// All emitters produce compact single-line JSON with a fixed key order.

/// {"n":5,"edges":[[1,2],...]}, edges sorted with i < j.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// {"n":3,"lt":[[1,2],...]} listing the full strict relation, sorted.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(std::string_view text);

std::string permutation_to_json(const Permutation& p);
/// {"l1":[...],"l2":[...]}
std::string realizer_to_json(const Realizer& r);
Realizer realizer_from_json(std::string_view text);

/// Comma-separated 1-based labels, e.g. "5,4,6,1,3,2". Whitespace ignored.
Permutation parse_permutation(std::string_view text);

std::string cm_verdict_to_json(const CmVerdict& v);
std::string upo_verdict_to_json(const UpoVerdict& v);
std::string well_covered_to_json(const WellCovered& w);
std::string recognition_to_json(const RecognitionResult& r);
std::string reisner_verdict_to_json(const ReisnerVerdict& v);

enum class DocumentKind { graph, poset };

/// A document with "edges" is a graph, one with "lt" a poset.
DocumentKind detect_kind(std::string_view text);

/// Undirected DOT, one node line per vertex and one line per edge.
std::string graph_to_dot(const Graph& g);
/// Hasse diagram: cover arcs only, nodes grouped into rank=same rows by height.
std::string poset_to_dot(const Poset& p);

}  // namespace cmperm::io
