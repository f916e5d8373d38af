#pragma once

// Named instances with their expected invariants, and a seeded random generator.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

struct Invariants {
  std::size_t components = 0;
  std::size_t boundary = 0;
  std::size_t genus = 0;  // summed Euler genus over components
  bool plane = false;

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

inline Invariants compute_invariants(const RibbonGraph& g) {
  Invariants inv;
  inv.components = connected_component_count(g);
  inv.boundary = boundary_count(g);
  inv.genus = total_euler_genus(g);
  inv.plane = inv.genus == 0 && !g.has_singular_edges();
  return inv;
}

struct CatalogEntry {
  std::string name;
  std::string description;
  GraphDocument document;
  Invariants expected;

  RibbonGraph graph() const { return RibbonGraph::from_document(document); }
};

namespace detail {

inline GraphDocument::Edge edge_doc(const std::string& id, bool twisted = false) {
  return {id, {id + ".1", id + ".2"}, twisted, false};
}

inline CatalogEntry entry(std::string name, std::string description, std::vector<std::vector<std::string>> vertices,
                          std::vector<GraphDocument::Edge> edges, Invariants expected) {
  GraphDocument doc;
  doc.vertices = std::move(vertices);
  doc.edges = std::move(edges);
  doc.name = name;
  doc.plane = expected.plane;
  return {std::move(name), std::move(description), std::move(doc), expected};
}

}  // namespace detail

inline std::vector<CatalogEntry> named_instances() {
  using detail::edge_doc;
  using detail::entry;
  std::vector<CatalogEntry> c;
  c.push_back(entry("I3", "three isolated vertices", {{}, {}, {}}, {}, {3, 3, 0, true}));
  c.push_back(entry("E1", "one untwisted non-loop edge", {{"e1.1"}, {"e1.2"}}, {edge_doc("e1")}, {1, 1, 0, true}));
  c.push_back(entry("B1", "one untwisted loop (annulus)", {{"e1.1", "e1.2"}}, {edge_doc("e1")}, {1, 2, 0, true}));
  c.push_back(entry("B1t", "one twisted loop (Moebius band)", {{"e1.1", "e1.2"}}, {edge_doc("e1", true)},
                    {1, 1, 1, false}));
  c.push_back(entry("DIGON", "plane digon: two vertices, two parallel edges", {{"e1.1", "e2.1"}, {"e2.2", "e1.2"}},
                    {edge_doc("e1"), edge_doc("e2")}, {1, 2, 0, true}));
  c.push_back(entry("TWO_LOOPS", "one vertex with two interlaced untwisted loops (torus)",
                    {{"e1.1", "e2.1", "e1.2", "e2.2"}}, {edge_doc("e1"), edge_doc("e2")}, {1, 1, 2, false}));
  c.push_back(entry("THETA", "plane theta graph", {{"e1.1", "e2.1", "e3.1"}, {"e3.2", "e2.2", "e1.2"}},
                    {edge_doc("e1"), edge_doc("e2"), edge_doc("e3")}, {1, 3, 0, true}));
  c.push_back(entry("DUMBBELL", "plane cubic graph: two loops joined by a bridge",
                    {{"e1.1", "e1.2", "e3.1"}, {"e3.2", "e2.1", "e2.2"}},
                    {edge_doc("e1"), edge_doc("e2"), edge_doc("e3")}, {1, 3, 0, true}));
  // K4: vertex 0 in the centre, 1, 2, 3 counter-clockwise around it.
  c.push_back(entry("K4P", "plane K4",
                    {{"e1.1", "e2.1", "e3.1"}, {"e4.1", "e1.2", "e6.2"}, {"e5.1", "e2.2", "e4.2"}, {"e6.1", "e3.2", "e5.2"}},
                    {edge_doc("e1"), edge_doc("e2"), edge_doc("e3"), edge_doc("e4"), edge_doc("e5"), edge_doc("e6")},
                    {1, 4, 0, true}));
  c.push_back(entry("K4NP", "K4 with the centre rotation reversed (toroidal)",
                    {{"e1.1", "e3.1", "e2.1"}, {"e4.1", "e1.2", "e6.2"}, {"e5.1", "e2.2", "e4.2"}, {"e6.1", "e3.2", "e5.2"}},
                    {edge_doc("e1"), edge_doc("e2"), edge_doc("e3"), edge_doc("e4"), edge_doc("e5"), edge_doc("e6")},
                    {1, 2, 2, false}));
  return c;
}

inline std::optional<CatalogEntry> find_instance(const std::string& name) {
  for (auto& e : named_instances())
    if (e.name == name) return e;
  return std::nullopt;
}

struct RandomLimits {
  std::size_t max_edges = 14;
};

/// Seeded random (edge-point) ribbon graph: uniform endpoints, insertion
/// positions and twist bits; `singular` of the edges are flagged singular.
/// Only raw engine output is used, so a seed gives the same graph on every platform.
inline RibbonGraph random_instance(std::size_t n_vertices, std::size_t n_edges, std::uint64_t seed,
                                   std::size_t singular = 0, const RandomLimits& limits = {}) {
  if (n_edges > limits.max_edges) throw GraphError("random_instance: edge count exceeds limit");
  if (n_edges > 0 && n_vertices == 0) throw GraphError("random_instance: edges need at least one vertex");
  if (singular > n_edges) throw GraphError("random_instance: more singular edges than edges");
  std::mt19937_64 rng(seed);
  GraphDocument doc;
  doc.vertices.resize(n_vertices);
  for (std::size_t i = 0; i < n_edges; ++i) {
    const std::string id = "e" + std::to_string(i + 1);
    GraphDocument::Edge e{id, {id + ".1", id + ".2"}, (rng() & 1U) != 0, false};
    for (const auto& d : e.darts) {
      auto& rot = doc.vertices[rng() % n_vertices];
      rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(rng() % (rot.size() + 1)), d);
    }
    doc.edges.push_back(std::move(e));
  }
  for (std::size_t s = 0; s < singular;) {
    auto& e = doc.edges[rng() % n_edges];
    if (!e.singular) {
      e.singular = true;
      ++s;
    }
  }
  return RibbonGraph::from_document(doc);
}

}  // namespace ribbon
