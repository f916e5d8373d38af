#pragma once

// Edge operations on edge-point ribbon graphs: deletion, contraction, partial
// Petrial, Penrose-contraction, contraction to a point, geometric dual, and the
// four-way partition G[A,B,C,D].

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

namespace detail {

inline void require_edge(const RibbonGraph& g, EdgeIndex e, const char* op) {
  if (!g.has_edge(e)) throw GraphError(std::string(op) + ": unknown edge index " + std::to_string(e));
}

inline void require_ordinary_edge(const RibbonGraph& g, EdgeIndex e, const char* op) {
  require_edge(g, e, op);
  if (g.edge(e).singular)
    throw GraphError(std::string(op) + ": edge " + g.edge(e).id + " is singular (contracted to a point)");
}

/// Rotation of v rotated so that it starts at d.
inline std::vector<Dart> starting_at(const std::vector<Dart>& rot, Dart d) {
  auto it = std::find(rot.begin(), rot.end(), d);
  std::vector<Dart> out(it, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;
}

}  // namespace detail

inline RibbonGraph delete_edge(const RibbonGraph& g, EdgeIndex e) {
  detail::require_ordinary_edge(g, e, "delete");
  RibbonGraph r = g;
  for (auto& rot : r.mutable_rotations())
    std::erase_if(rot, [e](Dart d) { return d.edge() == e; });
  r.erase_edge_record(e);
  return r;
}

inline RibbonGraph contract_edge(const RibbonGraph& g, EdgeIndex e) {
  detail::require_ordinary_edge(g, e, "contract");
  RibbonGraph r = g;
  const Dart d0 = Dart::of(e, 0);
  const Dart d1 = Dart::of(e, 1);
  const auto places = r.dart_places();
  const VertexIndex u = places[d0.value].vertex;
  const VertexIndex v = places[d1.value].vertex;
  const bool twisted = r.edge(e).twisted;
  auto& rots = r.mutable_rotations();

  if (u != v) {
    if (twisted) r = flip_vertex(r, v);  // leaves e untwisted
    auto& rs = r.mutable_rotations();
    std::vector<Dart> merged = detail::starting_at(rs[u], d0);
    std::vector<Dart> tail = detail::starting_at(rs[v], d1);
    merged.erase(merged.begin());
    merged.insert(merged.end(), tail.begin() + 1, tail.end());
    rs[u] = std::move(merged);
    rs.erase(rs.begin() + v);
    r.erase_edge_record(e);
    return r;
  }

  // Loop: rotation reads (d0, A, d1, B).
  const std::vector<Dart> rot = detail::starting_at(rots[u], d0);
  const auto mid = std::find(rot.begin(), rot.end(), d1);
  std::vector<Dart> a(rot.begin() + 1, mid);
  std::vector<Dart> b(mid + 1, rot.end());
  if (!twisted) {
    // An annulus: the two boundary curves become two vertices.
    rots[u] = std::move(a);
    rots.insert(rots.begin() + u + 1, std::move(b));
  } else {
    // A Moebius band: one boundary curve that runs through A forwards and B backwards.
    for (Dart d : b) r.mutable_edge(d.edge()).twisted = !r.edge(d.edge()).twisted;
    std::reverse(b.begin(), b.end());
    a.insert(a.end(), b.begin(), b.end());
    r.mutable_rotations()[u] = std::move(a);
  }
  r.erase_edge_record(e);
  return r;
}

/// Toggles the twist of e. Allowed on singular edges.
inline RibbonGraph partial_petrial(const RibbonGraph& g, EdgeIndex e) {
  detail::require_edge(g, e, "partial_petrial");
  RibbonGraph r = g;
  r.mutable_edge(e).twisted = !r.edge(e).twisted;
  return r;
}

inline RibbonGraph partial_petrial(const RibbonGraph& g, const std::vector<EdgeIndex>& edges) {
  RibbonGraph r = g;
  for (EdgeIndex e : edges) r = partial_petrial(r, e);
  return r;
}

inline RibbonGraph petrie_dual(const RibbonGraph& g) { return partial_petrial(g, g.edge_indices()); }

inline RibbonGraph penrose_contract(const RibbonGraph& g, EdgeIndex e) {
  detail::require_ordinary_edge(g, e, "penrose_contract");
  return contract_edge(partial_petrial(g, e), e);
}

inline RibbonGraph contract_to_point(const RibbonGraph& g, EdgeIndex e) {
  detail::require_ordinary_edge(g, e, "contract_to_point");
  RibbonGraph r = g;
  r.mutable_edge(e).singular = true;
  return r;
}

// String-id conveniences.
inline RibbonGraph delete_edge(const RibbonGraph& g, const std::string& id) { return delete_edge(g, g.edge_index(id)); }
inline RibbonGraph contract_edge(const RibbonGraph& g, const std::string& id) { return contract_edge(g, g.edge_index(id)); }
inline RibbonGraph partial_petrial(const RibbonGraph& g, const std::string& id) {
  return partial_petrial(g, g.edge_index(id));
}
inline RibbonGraph penrose_contract(const RibbonGraph& g, const std::string& id) {
  return penrose_contract(g, g.edge_index(id));
}
inline RibbonGraph contract_to_point(const RibbonGraph& g, const std::string& id) {
  return contract_to_point(g, g.edge_index(id));
}

/// Geometric dual: one vertex per boundary walk, darts placed in walk order.
///
/// Side 1 of an edge becomes its end-0 dart in the dual and side 2 its end-1
/// dart. A dual edge is untwisted iff its two sides are traversed in opposite
/// directions relative to the band.
inline RibbonGraph geometric_dual(const RibbonGraph& g) {
  if (g.has_singular_edges()) throw GraphError("geometric_dual: edge-point ribbon graphs are not supported");
  const auto walks = boundary_walks(g);
  GraphDocument doc;
  std::vector<std::array<int, 2>> direction(g.edge_slots(), {0, 0});
  for (const auto& w : walks) {
    std::vector<std::string> rot;
    for (const auto& s : w.steps) {
      if (s.kind != WalkStep::Kind::SideArc) continue;
      rot.push_back(g.edge(s.edge).dart_ids[s.side - 1]);
      direction[s.edge][s.side - 1] = s.forward ? 1 : -1;
    }
    doc.vertices.push_back(std::move(rot));
  }
  for (EdgeIndex e : g.edge_indices()) {
    const auto& rec = g.edge(e);
    doc.edges.push_back({rec.id, rec.dart_ids, direction[e][0] == direction[e][1], false});
  }
  return RibbonGraph::from_document(doc);
}

/// The four blocks of an ordered partition of the ordinary edges:
/// to_point (contract to a point), contract, remove (delete), penrose (Penrose-contract).
class OrderedPartition {
 public:
  OrderedPartition(const RibbonGraph& g, std::vector<EdgeIndex> to_point, std::vector<EdgeIndex> contract,
                   std::vector<EdgeIndex> remove, std::vector<EdgeIndex> penrose)
      : blocks_{std::move(to_point), std::move(contract), std::move(remove), std::move(penrose)} {
    std::set<EdgeIndex> seen;
    for (const auto& b : blocks_) {
      for (EdgeIndex e : b) {
        if (!g.has_edge(e) || g.edge(e).singular) throw GraphError("partition names an edge that is absent or singular");
        if (!seen.insert(e).second) throw GraphError("partition blocks are not disjoint");
      }
    }
    if (seen.size() != g.non_singular_edge_count()) throw GraphError("partition does not cover every ordinary edge");
  }

  static OrderedPartition from_ids(const RibbonGraph& g, const std::vector<std::vector<std::string>>& ids) {
    if (ids.size() != 4) throw GraphError("partition needs exactly four blocks");
    std::array<std::vector<EdgeIndex>, 4> b;
    for (std::size_t i = 0; i < 4; ++i)
      for (const auto& id : ids[i]) b[i].push_back(g.edge_index(id));
    return OrderedPartition(g, b[0], b[1], b[2], b[3]);
  }

  const std::vector<EdgeIndex>& to_point() const { return blocks_[0]; }
  const std::vector<EdgeIndex>& contract() const { return blocks_[1]; }
  const std::vector<EdgeIndex>& remove() const { return blocks_[2]; }
  const std::vector<EdgeIndex>& penrose() const { return blocks_[3]; }
  const std::array<std::vector<EdgeIndex>, 4>& blocks() const { return blocks_; }

 private:
  std::array<std::vector<EdgeIndex>, 4> blocks_;
};

enum class EdgeOp { ToPoint = 0, Contract = 1, Delete = 2, Penrose = 3 };

inline RibbonGraph apply_op(const RibbonGraph& g, EdgeOp op, EdgeIndex e) {
  switch (op) {
    case EdgeOp::ToPoint: return contract_to_point(g, e);
    case EdgeOp::Contract: return contract_edge(g, e);
    case EdgeOp::Delete: return delete_edge(g, e);
    case EdgeOp::Penrose: return penrose_contract(g, e);
  }
  throw GraphError("unknown edge operation");
}

/// G[A,B,C,D]. The operations act on distinct edges, so the order is immaterial;
/// `order`, when given, lists the edges in the order they are processed.
inline RibbonGraph apply_partition(const RibbonGraph& g, const OrderedPartition& p,
                                   const std::vector<EdgeIndex>& order = {}) {
  std::vector<EdgeOp> op_of(g.edge_slots(), EdgeOp::ToPoint);
  std::vector<EdgeIndex> seq;
  for (std::size_t b = 0; b < 4; ++b)
    for (EdgeIndex e : p.blocks()[b]) {
      op_of[e] = static_cast<EdgeOp>(b);
      seq.push_back(e);
    }
  if (!order.empty()) {
    if (std::set<EdgeIndex>(order.begin(), order.end()) != std::set<EdgeIndex>(seq.begin(), seq.end()))
      throw GraphError("apply_partition: order is not a permutation of the partitioned edges");
    seq = order;
  }
  RibbonGraph r = g;
  for (EdgeIndex e : seq) r = apply_op(r, op_of[e], e);
  return r;
}

}  // namespace ribbon
