#pragma once

// JSON text forms: graph documents, polynomials, and medial graphs.
//
// Graph document:
//   {"name": "THETA", "plane": true,
//    "vertices": [["e1.1", "e2.1", "e3.1"], ["e3.2", "e2.2", "e1.2"]],
//    "edges": {"e1": {"darts": ["e1.1", "e1.2"], "twisted": false, "singular": false}, ...}}
// Edges are written in natural id order; "name" and "plane" are optional.
// An optional top-level "singular": ["e2", ...] is accepted on input and folded
// into the per-edge flags on output.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ribbon/medial.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

inline GraphDocument parse_document_json(const Json& j) {
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  GraphDocument doc;
  try {
    if (j.contains("name")) doc.name = j.at("name").get<std::string>();
    if (j.contains("plane")) doc.plane = j.at("plane").get<bool>();
    for (const auto& rot : j.at("vertices")) doc.vertices.push_back(rot.get<std::vector<std::string>>());
    if (j.contains("singular")) doc.singular = j.at("singular").get<std::vector<std::string>>();
    const auto& edges = j.at("edges");
    if (!edges.is_object()) throw DocumentError("\"edges\" must be an object keyed by edge id");
    for (const auto& [id, e] : edges.items()) {
      GraphDocument::Edge edge;
      edge.id = id;
      const auto darts = e.at("darts").get<std::vector<std::string>>();
      if (darts.size() != 2) throw DocumentError("edges[" + id + "].darts must list exactly two darts");
      edge.darts = {darts[0], darts[1]};
      edge.twisted = e.value("twisted", false);
      edge.singular = e.value("singular", false);
      doc.edges.push_back(std::move(edge));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DocumentError(std::string("malformed graph document: ") + ex.what());
  }
  return doc;
}

inline GraphDocument parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw DocumentError(std::string("JSON parse error: ") + ex.what());
  }
  return parse_document_json(j);
}

/// Parses and validates; structural violations raise DocumentError with their locations.
inline RibbonGraph parse_graph(const std::string& text) {
  const GraphDocument doc = parse_document(text);
  try {
    return RibbonGraph::from_document(doc);
  } catch (const GraphError& ex) {
    throw DocumentError(ex.what());
  }
}

inline Json document_to_json(const GraphDocument& doc) {
  Json j = Json::object();
  if (doc.name) j["name"] = *doc.name;
  if (doc.plane) j["plane"] = *doc.plane;
  j["vertices"] = Json::array();
  for (const auto& rot : doc.vertices) j["vertices"].push_back(rot);
  std::vector<const GraphDocument::Edge*> edges;
  for (const auto& e : doc.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [](auto* a, auto* b) { return natural_less(a->id, b->id); });
  j["edges"] = Json::object();
  for (const auto* e : edges)
    j["edges"][e->id] = Json{{"darts", {e->darts[0], e->darts[1]}}, {"twisted", e->twisted}, {"singular", e->singular}};
  return j;
}

inline std::string serialize_document(const GraphDocument& doc) { return document_to_json(doc).dump(2) + "\n"; }

inline std::string serialize_graph(const RibbonGraph& g, const std::optional<std::string>& name = std::nullopt,
                                   std::optional<bool> plane = std::nullopt) {
  GraphDocument doc = g.to_document();
  doc.name = name;
  doc.plane = plane;
  return serialize_document(doc);
}

/// [{"coeff": "3", "exps": [e_w, e_x, e_y, e_z, e_t]}, ...] in canonical term order.
/// Coefficients are decimal strings so that arbitrary precision survives.
inline Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json{{"coeff", c.str()}, {"exps", e}});
  return out;
}

inline MultiPoly poly_from_json(const Json& j) {
  MultiPoly p;
  try {
    for (const auto& term : j) {
      const auto exps = term.at("exps").get<std::vector<std::uint32_t>>();
      if (exps.size() != kVarCount) throw DocumentError("polynomial term needs five exponents");
      Exponents e{exps[0], exps[1], exps[2], exps[3], exps[4]};
      p.add_term(e, BigInt(term.at("coeff").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DocumentError(std::string("malformed polynomial: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    throw DocumentError(std::string("malformed polynomial: ") + ex.what());
  }
  return p;
}

inline Json medial_to_json(const RibbonGraph& g, const MedialGraph& m) {
  const auto pairing = [](const Pairing& p) { return Json{{p[0][0], p[0][1]}, {p[1][0], p[1][1]}}; };
  Json j = Json::object();
  j["slots"] = Json{"end0+", "end0-", "end1+", "end1-"};
  j["vertices"] = Json::array();
  for (const auto& v : m.vertices) {
    j["vertices"].push_back(Json{{"edge", g.edge(v.edge).id},
                                 {"singular", v.singular},
                                 {"slot_edges", v.slot_edge},
                                 {"black", pairing(v.black)},
                                 {"white", pairing(v.white)},
                                 {"crossing", pairing(v.crossing)}});
  }
  j["edges"] = Json::array();
  for (const auto& e : m.edges) {
    j["edges"].push_back(Json{{"ends", {{e.ends[0].vertex, e.ends[0].slot}, {e.ends[1].vertex, e.ends[1].slot}}},
                              {"corner", {{"vertex", e.corner_vertex}, {"darts", {g.dart_id(e.from), g.dart_id(e.to)}}}}});
  }
  j["free_loops"] = m.free_loops;
  return j;
}

}  // namespace ribbon
