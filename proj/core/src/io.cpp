#include "cmperm/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cmperm::io {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

int read_count(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError(std::string("expected integer field \"") + key + "\"");
  }
  const auto n = doc[key].get<long long>();
  if (n < 0 || n > 1'000'000) throw ParseError(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(n);
}

std::vector<std::pair<int, int>> read_pairs(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("expected array field \"") + key + "\"");
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& item : doc[key]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError(std::string("\"") + key + "\" entries must be [int,int]");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

std::vector<int> read_labels(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError(std::string("expected array field \"") + key + "\"");
  }
  std::vector<int> out;
  for (const auto& item : doc[key]) {
    if (!item.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must hold integers");
    out.push_back(item.get<int>());
  }
  return out;
}

json set_list(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json doc;
  doc["n"] = g.n();
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph graph_from_json(std::string_view text) {
  const json doc = parse(text);
  const int n = read_count(doc, "n");
  try {
    return Graph::make(n, read_pairs(doc, "edges"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string poset_to_json(const Poset& p) {
  json lt = json::array();
  for (auto [x, y] : p.relations()) lt.push_back({x, y});
  json doc;
  doc["n"] = p.n();
  doc["lt"] = std::move(lt);
  return doc.dump();
}

Poset poset_from_json(std::string_view text) {
  const json doc = parse(text);
  const int n = read_count(doc, "n");
  try {
    return Poset::from_relation(n, read_pairs(doc, "lt"));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string permutation_to_json(const Permutation& p) { return json(p.seq()).dump(); }

std::string realizer_to_json(const Realizer& r) {
  json doc;
  doc["l1"] = r.l1().seq();
  doc["l2"] = r.l2().seq();
  return doc.dump();
}

Realizer realizer_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw ParseError("realizer must be an object");
  try {
    return Realizer(Permutation(read_labels(doc, "l1")), Permutation(read_labels(doc, "l2")));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> labels;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) throw ParseError("permutation: empty entry");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("permutation: bad label \"" + token + "\"");
    }
    if (used != token.size()) throw ParseError("permutation: bad label \"" + token + "\"");
    labels.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    if (ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  if (token.empty() && labels.empty()) throw ParseError("permutation: empty");
  flush();
  try {
    return Permutation(std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string cm_verdict_to_json(const CmVerdict& v) {
  json partitions = json::array();
  for (const auto& p : v.partitions_found) {
    auto parts = p.parts;
    for (auto& s : parts) std::sort(s.begin(), s.end());
    std::sort(parts.begin(), parts.end());
    partitions.push_back(set_list(parts));
  }
  json doc;
  doc["cm"] = v.cm;
  doc["reason"] = std::string(to_string(v.reason));
  doc["r"] = v.r;
  doc["partitions"] = std::move(partitions);
  return doc.dump();
}

std::string upo_verdict_to_json(const UpoVerdict& v) {
  json doc;
  doc["upo"] = v.upo;
  doc["method"] = std::string(to_string(v.method));
  doc["violator"] = v.violator ? json(*v.violator) : json(nullptr);
  return doc.dump();
}

std::string well_covered_to_json(const WellCovered& w) {
  json doc;
  doc["well_covered"] = w.well_covered;
  doc["r"] = w.r;
  doc["witness"] = w.witness ? json::array({w.witness->first, w.witness->second}) : json(nullptr);
  return doc.dump();
}

std::string recognition_to_json(const RecognitionResult& r) {
  json doc;
  doc["outcome"] = std::string(to_string(r.outcome));
  if (r.realizer) {
    json real;
    real["l1"] = r.realizer->l1().seq();
    real["l2"] = r.realizer->l2().seq();
    doc["realizer"] = std::move(real);
  } else {
    doc["realizer"] = nullptr;
  }
  const auto arcs = [](const std::optional<Orientation>& o) {
    if (!o) return json(nullptr);
    json out = json::array();
    for (auto [u, v] : o->arcs()) out.push_back({u, v});
    return out;
  };
  doc["orientation"] = arcs(r.orientation);
  doc["complement_orientation"] = arcs(r.complement_orientation);
  return doc.dump();
}

std::string reisner_verdict_to_json(const ReisnerVerdict& v) {
  json fields = json::array();
  for (Field f : v.fields) fields.push_back(std::string(to_string(f)));
  json doc;
  doc["cm"] = v.cm;
  doc["fields"] = std::move(fields);
  if (v.witness) {
    json w;
    w["face"] = v.witness->face;
    w["dimension"] = v.witness->dimension;
    w["field"] = std::string(to_string(v.witness->field));
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump();
}

DocumentKind detect_kind(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  if (doc.contains("edges")) return DocumentKind::graph;
  if (doc.contains("lt")) return DocumentKind::poset;
  throw ParseError("document has neither \"edges\" nor \"lt\"");
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 1; v <= g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_to_dot(const Poset& p) {
  const auto d = heights(p);
  std::ostringstream out;
  out << "digraph P {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    out << "  { rank=same;";
    for (Vertex v : d.levels[i]) out << ' ' << v << ';';
    out << " }\n";
  }
  for (auto [x, y] : p.cover_relations()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cmperm::io
