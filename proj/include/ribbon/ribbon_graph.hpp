#pragma once

// Signed rotation systems for ribbon graphs and edge-point ribbon graphs.
//
// An edge owns two darts (dart 2e is end 0, dart 2e+1 is end 1). Each vertex
// carries the cyclic order of the darts attached to it; an empty rotation is an
// isolated vertex. Every edge has a twist bit, and edges flagged singular are the
// bands that have been contracted to a point.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ribbon {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using EdgeIndex = std::uint32_t;
using VertexIndex = std::uint32_t;

struct Dart {
  std::uint32_t value = 0;

  constexpr Dart() = default;
  constexpr explicit Dart(std::uint32_t v) : value(v) {}
  static constexpr Dart of(EdgeIndex e, unsigned end) { return Dart{2 * e + end}; }

  constexpr EdgeIndex edge() const { return value >> 1; }
  constexpr unsigned end() const { return value & 1U; }
  constexpr Dart partner() const { return Dart{value ^ 1U}; }

  friend constexpr auto operator<=>(Dart, Dart) = default;
};

struct EdgeRecord {
  std::string id;
  std::array<std::string, 2> dart_ids;
  bool twisted = false;
  bool singular = false;
};

/// Plain description of a graph as written in a document: string ids everywhere.
struct GraphDocument {
  struct Edge {
    std::string id;
    std::array<std::string, 2> darts;
    bool twisted = false;
    bool singular = false;
  };
  std::vector<std::vector<std::string>> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> singular;  // extra singular edge ids, merged into the edge flags
  std::optional<std::string> name;
  std::optional<bool> plane;
};

struct Diagnostic {
  std::string location;
  std::string message;
};

/// "e2" < "e10": digit runs compare numerically.
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

/// Checks every structural invariant of a document; one diagnostic per violation.
inline std::vector<Diagnostic> validate(const GraphDocument& doc) {
  std::vector<Diagnostic> out;
  std::map<std::string, std::string> dart_owner;  // dart id -> edge id
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < doc.edges.size(); ++i) {
    const auto& e = doc.edges[i];
    const std::string loc = "edges[" + e.id + "]";
    if (e.id.empty()) out.push_back({"edges[" + std::to_string(i) + "]", "empty edge id"});
    if (!edge_ids.insert(e.id).second) out.push_back({loc, "duplicate edge id"});
    if (e.darts[0] == e.darts[1]) out.push_back({loc, "edge darts must be distinct"});
    for (const auto& d : e.darts) {
      if (d.empty()) {
        out.push_back({loc, "empty dart id"});
        continue;
      }
      auto [it, inserted] = dart_owner.emplace(d, e.id);
      if (!inserted && !(it->second == e.id && e.darts[0] == e.darts[1])) {
        out.push_back({loc, "dart " + d + " already belongs to edge " + it->second});
      }
    }
  }
  std::map<std::string, int> seen;
  for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
    for (const auto& d : doc.vertices[v]) {
      const std::string loc = "vertices[" + std::to_string(v) + "]";
      if (!dart_owner.count(d)) out.push_back({loc, "dart " + d + " does not belong to any edge"});
      if (++seen[d] == 2) out.push_back({loc, "dart " + d + " appears in more than one rotation position"});
    }
  }
  for (const auto& id : doc.singular)
    if (!edge_ids.count(id)) out.push_back({"singular", "edge " + id + " is not an edge of the graph"});
  for (const auto& [d, owner] : dart_owner) {
    if (!seen.count(d)) out.push_back({"edges[" + owner + "]", "dart " + d + " is not placed in any rotation"});
  }
  return out;
}

class RibbonGraph {
 public:
  RibbonGraph() = default;

  /// Builds from a document; throws GraphError listing every diagnostic on failure.
  static RibbonGraph from_document(const GraphDocument& doc) {
    auto diags = validate(doc);
    if (!diags.empty()) {
      std::string msg = "invalid graph:";
      for (const auto& d : diags) msg += "\n  " + d.location + ": " + d.message;
      throw GraphError(msg);
    }
    std::vector<std::size_t> order(doc.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return natural_less(doc.edges[a].id, doc.edges[b].id); });
    RibbonGraph g;
    std::map<std::string, Dart> dart_of;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& e = doc.edges[order[k]];
      const bool listed = std::find(doc.singular.begin(), doc.singular.end(), e.id) != doc.singular.end();
      g.edges_.push_back(EdgeRecord{e.id, e.darts, e.twisted, e.singular || listed});
      dart_of.emplace(e.darts[0], Dart::of(static_cast<EdgeIndex>(k), 0));
      dart_of.emplace(e.darts[1], Dart::of(static_cast<EdgeIndex>(k), 1));
    }
    for (const auto& rot : doc.vertices) {
      std::vector<Dart> r;
      r.reserve(rot.size());
      for (const auto& d : rot) r.push_back(dart_of.at(d));
      g.rotations_.push_back(std::move(r));
    }
    return g;
  }

  GraphDocument to_document() const {
    GraphDocument doc;
    for (const auto& rot : rotations_) {
      std::vector<std::string> r;
      for (Dart d : rot) r.push_back(dart_id(d));
      doc.vertices.push_back(std::move(r));
    }
    std::vector<EdgeIndex> ids = edge_indices();
    std::sort(ids.begin(), ids.end(), [&](EdgeIndex a, EdgeIndex b) { return natural_less(edge(a).id, edge(b).id); });
    for (EdgeIndex e : ids) {
      const auto& r = edge(e);
      doc.edges.push_back({r.id, r.dart_ids, r.twisted, r.singular});
    }
    return doc;
  }

  std::size_t vertex_count() const { return rotations_.size(); }
  /// Present edges, singular ones included.
  std::size_t edge_count() const {
    return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const auto& e) { return e.has_value(); }));
  }
  std::size_t non_singular_edge_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const auto& e) { return e && !e->singular; }));
  }
  /// Upper bound on edge indices; indices stay stable under deletion and contraction.
  std::size_t edge_slots() const { return edges_.size(); }

  bool has_edge(EdgeIndex e) const { return e < edges_.size() && edges_[e].has_value(); }
  const EdgeRecord& edge(EdgeIndex e) const {
    if (!has_edge(e)) throw GraphError("no edge with index " + std::to_string(e));
    return *edges_[e];
  }
  std::vector<EdgeIndex> edge_indices() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      if (edges_[e]) out.push_back(e);
    return out;
  }
  std::vector<EdgeIndex> non_singular_edges() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      if (edges_[e] && !edges_[e]->singular) out.push_back(e);
    return out;
  }
  std::vector<EdgeIndex> singular_edges() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      if (edges_[e] && edges_[e]->singular) out.push_back(e);
    return out;
  }
  bool has_singular_edges() const { return !singular_edges().empty(); }

  std::optional<EdgeIndex> find_edge(const std::string& id) const {
    for (EdgeIndex e = 0; e < edges_.size(); ++e)
      if (edges_[e] && edges_[e]->id == id) return e;
    return std::nullopt;
  }
  EdgeIndex edge_index(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) throw GraphError("unknown edge: " + id);
    return *e;
  }

  const std::string& dart_id(Dart d) const { return edge(d.edge()).dart_ids[d.end()]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::vector<Dart>& rotation(VertexIndex v) const { return rotations_.at(v); }

  std::size_t isolated_vertex_count() const {
    return static_cast<std::size_t>(std::count_if(rotations_.begin(), rotations_.end(), [](const auto& r) { return r.empty(); }));
  }

  struct DartPlace {
    VertexIndex vertex;
    std::uint32_t position;
  };
  /// Position of every dart of a present edge, indexed by dart value.
  std::vector<DartPlace> dart_places() const {
    std::vector<DartPlace> out(2 * edges_.size(), DartPlace{~0U, ~0U});
    for (VertexIndex v = 0; v < rotations_.size(); ++v)
      for (std::uint32_t i = 0; i < rotations_[v].size(); ++i) out[rotations_[v][i].value] = {v, i};
    return out;
  }

  bool is_loop(EdgeIndex e) const {
    const auto places = dart_places();
    return places[Dart::of(e, 0).value].vertex == places[Dart::of(e, 1).value].vertex;
  }

  /// Structural key: identical keys mean identical labeled structures.
  std::string key() const {
    std::string k;
    k.reserve(8 * edges_.size() + 4 * rotations_.size());
    for (const auto& rot : rotations_) {
      k.push_back('(');
      for (Dart d : rot) {
        k.append(std::to_string(d.value));
        k.push_back(',');
      }
      k.push_back(')');
    }
    k.push_back('|');
    for (const auto& e : edges_) k.push_back(!e ? '_' : static_cast<char>('0' + (e->twisted ? 1 : 0) + (e->singular ? 2 : 0)));
    return k;
  }

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    if (a.rotations_ != b.rotations_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.has_value() != y.has_value()) return false;
      if (x && (x->id != y->id || x->dart_ids != y->dart_ids || x->twisted != y->twisted || x->singular != y->singular))
        return false;
    }
    return true;
  }

  // Low-level mutation used by the graph operations. Callers keep the invariants.
  std::vector<std::vector<Dart>>& mutable_rotations() { return rotations_; }
  EdgeRecord& mutable_edge(EdgeIndex e) {
    if (!has_edge(e)) throw GraphError("no edge with index " + std::to_string(e));
    return *edges_[e];
  }
  void erase_edge_record(EdgeIndex e) { edges_.at(e).reset(); }
  EdgeIndex add_edge_record(EdgeRecord r) {
    edges_.emplace_back(std::move(r));
    return static_cast<EdgeIndex>(edges_.size() - 1);
  }
  VertexIndex add_vertex(std::vector<Dart> rotation = {}) {
    rotations_.push_back(std::move(rotation));
    return static_cast<VertexIndex>(rotations_.size() - 1);
  }

 private:
  std::vector<std::vector<Dart>> rotations_;
  std::vector<std::optional<EdgeRecord>> edges_;
};

/// Edge-point ribbon graphs share the representation; singular edges mark the pinched bands.
using EdgePointRibbonGraph = RibbonGraph;

/// Re-checks the invariants of an in-memory graph (used on operation outputs).
inline std::vector<Diagnostic> validate(const RibbonGraph& g) {
  std::vector<Diagnostic> out;
  std::vector<int> seen(2 * g.edge_slots(), 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (Dart d : g.rotation(v)) {
      if (!g.has_edge(d.edge())) {
        out.push_back({"vertices[" + std::to_string(v) + "]", "dart of a removed edge"});
        continue;
      }
      if (++seen[d.value] == 2) out.push_back({"vertices[" + std::to_string(v) + "]", "dart " + g.dart_id(d) + " repeated"});
    }
  }
  for (EdgeIndex e : g.edge_indices())
    for (unsigned end = 0; end < 2; ++end)
      if (seen[Dart::of(e, end).value] == 0) out.push_back({"edges[" + g.edge(e).id + "]", "dart not placed"});
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::size_t classes() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) c += find(i) == i ? 1 : 0;
    return c;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Connected components; singular edges connect like ordinary edges.
inline std::size_t connected_component_count(const RibbonGraph& g) {
  UnionFind uf(g.vertex_count());
  const auto places = g.dart_places();
  std::size_t merges = 0;
  for (EdgeIndex e : g.edge_indices())
    merges += uf.unite(places[Dart::of(e, 0).value].vertex, places[Dart::of(e, 1).value].vertex) ? 1 : 0;
  return g.vertex_count() - merges;
}

// Boundary structure.
//
// Each dart has two flanks: '+' is the flank facing its rotation successor and
// '-' the one facing its predecessor. Flank index = 2 * dart + (0 for '+', 1 for '-').
// A corner arc joins (d,+) to (succ d,-). The side arcs of an edge join
// (d0,+)-(d1,-) and (d0,-)-(d1,+) when untwisted, (d0,+)-(d1,+) and (d0,-)-(d1,-)
// when twisted. Side 1 is the arc through (d0,+), side 2 the arc through (d0,-).
namespace flank {
inline constexpr std::uint32_t of(Dart d, unsigned minus) { return 2 * d.value + minus; }
inline constexpr Dart dart(std::uint32_t f) { return Dart{f >> 1}; }
inline constexpr unsigned sign(std::uint32_t f) { return f & 1U; }

/// Flank reached by crossing the side arc at f.
inline std::uint32_t across_edge(const RibbonGraph& g, std::uint32_t f) {
  const Dart d = dart(f);
  const unsigned s = g.edge(d.edge()).twisted ? sign(f) : 1U - sign(f);
  return of(d.partner(), s);
}
}  // namespace flank

/// Side (1 or 2) of the arc containing flank f.
inline unsigned side_arc_of_flank(const RibbonGraph& g, std::uint32_t f) {
  const Dart d = flank::dart(f);
  if (d.end() == 0) return flank::sign(f) + 1;
  // Map back to the end-0 flank on the same arc.
  return flank::sign(flank::across_edge(g, f)) + 1;
}

/// Flank reached by following the corner arc at f.
inline std::uint32_t along_corner(const RibbonGraph& g, const std::vector<RibbonGraph::DartPlace>& places,
                                  std::uint32_t f) {
  const Dart d = flank::dart(f);
  const auto& rot = g.rotation(places[d.value].vertex);
  const std::uint32_t n = static_cast<std::uint32_t>(rot.size());
  const std::uint32_t pos = places[d.value].position;
  if (flank::sign(f) == 0) return flank::of(rot[(pos + 1) % n], 1);
  return flank::of(rot[(pos + n - 1) % n], 0);
}

struct WalkStep {
  enum class Kind { SideArc, Corner, IsolatedVertex };
  Kind kind = Kind::SideArc;
  // SideArc
  EdgeIndex edge = 0;
  unsigned side = 0;     // 1 or 2
  bool forward = false;  // traversed from the end-0 dart to the end-1 dart
  // Corner and IsolatedVertex
  VertexIndex vertex = 0;
  Dart from{}, to{};  // corner between consecutive darts, in rotation order

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

struct BoundaryWalk {
  std::size_t id = 0;
  std::vector<WalkStep> steps;
};

/// Boundary components of the underlying ribbon graph (singular flags ignored).
inline std::vector<BoundaryWalk> boundary_walks(const RibbonGraph& g) {
  std::vector<BoundaryWalk> walks;
  const auto places = g.dart_places();
  std::vector<char> visited(4 * g.edge_slots(), 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      WalkStep s;
      s.kind = WalkStep::Kind::IsolatedVertex;
      s.vertex = v;
      walks.push_back({walks.size(), {s}});
      continue;
    }
  }
  // '+' flanks first: on an untwisted graph every walk then runs the positive way round its corners.
  std::vector<std::uint32_t> starts;
  for (unsigned minus = 0; minus < 2; ++minus)
    for (EdgeIndex e : g.edge_indices())
      for (unsigned end = 0; end < 2; ++end) starts.push_back(flank::of(Dart::of(e, end), minus));
  for (const std::uint32_t start : starts) {
    if (visited[start]) continue;
    BoundaryWalk w{walks.size(), {}};
    std::uint32_t f = start;
    do {
      const std::uint32_t h = along_corner(g, places, f);
      WalkStep corner;
      corner.kind = WalkStep::Kind::Corner;
      corner.vertex = places[flank::dart(f).value].vertex;
      corner.from = flank::sign(f) == 0 ? flank::dart(f) : flank::dart(h);
      corner.to = flank::sign(f) == 0 ? flank::dart(h) : flank::dart(f);
      w.steps.push_back(corner);
      const std::uint32_t next = flank::across_edge(g, h);
      visited[f] = visited[h] = 1;
      WalkStep arc;
      arc.kind = WalkStep::Kind::SideArc;
      arc.edge = flank::dart(h).edge();
      arc.side = side_arc_of_flank(g, h);
      arc.forward = flank::dart(h).end() == 0;
      w.steps.push_back(arc);
      f = next;
    } while (f != start);
    walks.push_back(std::move(w));
  }
  return walks;
}

/// Plain boundary-component count of the underlying ribbon graph.
inline std::size_t boundary_count(const RibbonGraph& g) { return boundary_walks(g).size(); }

/// Boundary components of an edge-point ribbon graph: walks that meet at a singular point are wedged into one.
inline std::size_t pinched_boundary_count(const RibbonGraph& g) {
  const auto walks = boundary_walks(g);
  std::map<std::pair<EdgeIndex, unsigned>, std::size_t> walk_of_arc;
  for (const auto& w : walks)
    for (const auto& s : w.steps)
      if (s.kind == WalkStep::Kind::SideArc) walk_of_arc[{s.edge, s.side}] = w.id;
  UnionFind uf(walks.size());
  for (EdgeIndex e : g.singular_edges()) uf.unite(walk_of_arc.at({e, 1}), walk_of_arc.at({e, 2}));
  return uf.classes();
}

/// Same count as pinched_boundary_count via a flank union-find; no walk records are built.
inline std::size_t pinched_boundary_count_fast(const RibbonGraph& g) {
  const std::size_t slots = g.edge_slots();
  const auto places = g.dart_places();
  UnionFind uf(4 * slots);
  for (EdgeIndex e : g.edge_indices()) {
    const auto& rec = g.edge(e);
    for (unsigned end = 0; end < 2; ++end) {
      const Dart d = Dart::of(e, end);
      uf.unite(flank::of(d, 0), along_corner(g, places, flank::of(d, 0)));
    }
    for (unsigned minus = 0; minus < 2; ++minus) {
      const std::uint32_t f = flank::of(Dart::of(e, 0), minus);
      uf.unite(f, flank::across_edge(g, f));
    }
    if (rec.singular) {
      for (unsigned i = 1; i < 4; ++i) uf.unite(flank::of(Dart::of(e, 0), 0), 4 * e + i);
    }
  }
  std::size_t classes = 0;
  for (EdgeIndex e : g.edge_indices())
    for (unsigned i = 0; i < 4; ++i) classes += uf.find(4 * e + i) == 4 * e + i ? 1 : 0;
  return classes + g.isolated_vertex_count();
}

/// Euler genus 2 - |V| + |E| - boundary count; connected graphs only.
inline std::size_t euler_genus(const RibbonGraph& g) {
  if (g.has_singular_edges()) throw GraphError("euler_genus: singular edges present");
  if (connected_component_count(g) != 1) throw GraphError("euler_genus: graph is not connected");
  const long long genus = 2 - static_cast<long long>(g.vertex_count()) + static_cast<long long>(g.edge_count()) -
                          static_cast<long long>(boundary_count(g));
  return static_cast<std::size_t>(genus);
}

/// Sum of per-component Euler genera.
inline std::size_t total_euler_genus(const RibbonGraph& g) {
  const long long genus = 2 * static_cast<long long>(connected_component_count(g)) -
                          static_cast<long long>(g.vertex_count()) + static_cast<long long>(g.edge_count()) -
                          static_cast<long long>(boundary_count(g));
  return static_cast<std::size_t>(genus);
}

/// Orientable iff some choice of vertex flips removes every twist.
inline bool is_orientable(const RibbonGraph& g) {
  const auto places = g.dart_places();
  std::vector<int> sign(g.vertex_count(), -1);
  for (VertexIndex root = 0; root < g.vertex_count(); ++root) {
    if (sign[root] != -1) continue;
    sign[root] = 0;
    std::vector<VertexIndex> stack{root};
    while (!stack.empty()) {
      const VertexIndex v = stack.back();
      stack.pop_back();
      for (Dart d : g.rotation(v)) {
        const VertexIndex u = places[d.partner().value].vertex;
        const int want = sign[v] ^ (g.edge(d.edge()).twisted ? 1 : 0);
        if (sign[u] == -1) {
          sign[u] = want;
          stack.push_back(u);
        } else if (sign[u] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Reverses one rotation and toggles the twist of every edge with exactly one end there.
inline RibbonGraph flip_vertex(const RibbonGraph& g, VertexIndex v) {
  RibbonGraph r = g;
  auto& rot = r.mutable_rotations().at(v);
  std::reverse(rot.begin(), rot.end());
  std::map<EdgeIndex, int> ends;
  for (Dart d : rot) ++ends[d.edge()];
  for (const auto& [e, n] : ends)
    if (n == 1) r.mutable_edge(e).twisted = !r.mutable_edge(e).twisted;
  return r;
}

/// Disjoint union. Colliding edge or dart ids from `b` get a trailing apostrophe.
inline RibbonGraph disjoint_union(const RibbonGraph& a, const RibbonGraph& b) {
  GraphDocument da = a.to_document();
  GraphDocument db = b.to_document();
  std::set<std::string> taken;
  for (const auto& e : da.edges) {
    taken.insert(e.id);
    taken.insert(e.darts[0]);
    taken.insert(e.darts[1]);
  }
  std::map<std::string, std::string> rename;
  auto fresh = [&](std::string s) {
    while (taken.count(s)) s += "'";
    taken.insert(s);
    return s;
  };
  for (auto& e : db.edges) {
    e.id = fresh(e.id);
    for (auto& d : e.darts) {
      const std::string old = d;
      d = fresh(d);
      rename[old] = d;
    }
  }
  for (auto& rot : db.vertices)
    for (auto& d : rot) d = rename.at(d);
  da.vertices.insert(da.vertices.end(), db.vertices.begin(), db.vertices.end());
  da.edges.insert(da.edges.end(), db.edges.begin(), db.edges.end());
  da.name.reset();
  da.plane.reset();
  return RibbonGraph::from_document(da);
}

/// Multigraph obtained by forgetting rotations, twists, and singular flags.
struct AbstractGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

inline AbstractGraph underlying_graph(const RibbonGraph& g) {
  AbstractGraph a;
  a.vertex_count = g.vertex_count();
  const auto places = g.dart_places();
  for (EdgeIndex e : g.edge_indices())
    a.edges.emplace_back(places[Dart::of(e, 0).value].vertex, places[Dart::of(e, 1).value].vertex);
  return a;
}

}  // namespace ribbon
