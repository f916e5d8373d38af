#pragma once

// Medial graphs and brute-force k-valuation counting.
//
// The medial vertex of edge e has four slots, one per flank of e's darts:
// slot 0 = (end 0, +), 1 = (end 0, -), 2 = (end 1, +), 3 = (end 1, -).
// A medial edge follows one corner of the ribbon graph and joins two slots.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

using Pairing = std::array<std::array<std::uint8_t, 2>, 2>;

enum class Config { White, Black, Crossing, Total };

inline const char* config_name(Config c) {
  switch (c) {
    case Config::White: return "white";
    case Config::Black: return "black";
    case Config::Crossing: return "crossing";
    case Config::Total: return "total";
  }
  return "?";
}

struct MedialVertex {
  EdgeIndex edge = 0;
  bool singular = false;
  std::array<std::uint32_t, 4> slot_edge{};  // medial edge bound to each slot
  Pairing black{};
  Pairing white{};
  Pairing crossing{};
};

struct SlotRef {
  std::uint32_t vertex = 0;
  std::uint8_t slot = 0;
};

struct MedialEdge {
  std::array<SlotRef, 2> ends;
  VertexIndex corner_vertex = 0;  // ribbon-graph vertex whose corner this edge follows
  Dart from{}, to{};              // the corner, in rotation order
};

struct MedialGraph {
  std::vector<MedialVertex> vertices;
  std::vector<MedialEdge> edges;
  std::size_t free_loops = 0;

  std::size_t non_singular_vertex_count() const {
    std::size_t n = 0;
    for (const auto& v : vertices) n += v.singular ? 0 : 1;
    return n;
  }
};

inline MedialGraph build_medial(const RibbonGraph& g) {
  MedialGraph m;
  std::vector<std::uint32_t> vertex_of_edge(g.edge_slots(), ~0U);
  for (EdgeIndex e : g.edge_indices()) {
    MedialVertex mv;
    mv.edge = e;
    mv.singular = g.edge(e).singular;
    mv.black = {{{0, 1}, {2, 3}}};
    // Side arcs of e pair the flanks that bound the same white face.
    const std::uint32_t base = flank::of(Dart::of(e, 0), 0);
    const auto other_end = [&](unsigned s) {
      return static_cast<std::uint8_t>(flank::across_edge(g, base + s) - base);
    };
    mv.white = {{{0, other_end(0)}, {1, other_end(1)}}};
    mv.crossing = {{{0, static_cast<std::uint8_t>(mv.white[0][1] == 2 ? 3 : 2)},
                    {1, static_cast<std::uint8_t>(mv.white[1][1] == 2 ? 3 : 2)}}};
    vertex_of_edge[e] = static_cast<std::uint32_t>(m.vertices.size());
    m.vertices.push_back(mv);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.empty()) {
      ++m.free_loops;
      continue;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      const Dart nxt = rot[(i + 1) % rot.size()];
      MedialEdge me;
      me.ends[0] = {vertex_of_edge[d.edge()], static_cast<std::uint8_t>(2 * d.end())};
      me.ends[1] = {vertex_of_edge[nxt.edge()], static_cast<std::uint8_t>(2 * nxt.end() + 1)};
      me.corner_vertex = v;
      me.from = d;
      me.to = nxt;
      const auto id = static_cast<std::uint32_t>(m.edges.size());
      for (const auto& end : me.ends) m.vertices[end.vertex].slot_edge[end.slot] = id;
      m.edges.push_back(me);
    }
  }
  return m;
}

struct ConfigTally {
  std::uint32_t total = 0;  // non-singular total vertices only
  std::uint32_t white = 0;
  std::uint32_t black = 0;
  std::uint32_t crossing = 0;
  friend auto operator<=>(const ConfigTally&, const ConfigTally&) = default;
};

/// Colour per medial edge, then one per free-loop; colours are 0..k-1.
struct KValuation {
  std::vector<std::uint8_t> edge_colour;
  std::vector<std::uint8_t> loop_colour;
};

class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline bool monochromatic(const std::array<std::uint8_t, 4>& c, const Pairing& p) {
  return c[p[0][0]] == c[p[0][1]] && c[p[1][0]] == c[p[1][1]];
}
inline std::array<std::uint8_t, 4> slot_colours(const MedialVertex& v, const std::vector<std::uint8_t>& colour) {
  return {colour[v.slot_edge[0]], colour[v.slot_edge[1]], colour[v.slot_edge[2]], colour[v.slot_edge[3]]};
}
inline bool even_at(const std::array<std::uint8_t, 4>& c) {
  // Four entries with every value appearing an even number of times.
  return (c[0] == c[1] && c[2] == c[3]) || (c[0] == c[2] && c[1] == c[3]) || (c[0] == c[3] && c[1] == c[2]);
}
}  // namespace detail

inline Config classify_vertex(const MedialGraph& m, const KValuation& phi, std::uint32_t v) {
  const auto& mv = m.vertices.at(v);
  if (mv.singular) throw ValuationError("classify_vertex: vertex is singular");
  const auto c = detail::slot_colours(mv, phi.edge_colour);
  if (!detail::even_at(c)) throw ValuationError("classify_vertex: colours are not even at the vertex");
  if (c[0] == c[1] && c[1] == c[2] && c[2] == c[3]) return Config::Total;
  if (detail::monochromatic(c, mv.black)) return Config::Black;
  if (detail::monochromatic(c, mv.white)) return Config::White;
  return Config::Crossing;
}

struct EnumerationLimits {
  std::size_t max_edges = 6;  // ribbon-graph edges
  unsigned max_k = 4;
};

/// Calls f(phi, tally) for every k-valuation, each exactly once.
template <class F>
void for_each_k_valuation(const MedialGraph& m, unsigned k, F&& f, const EnumerationLimits& limits = {}) {
  if (k == 0) throw ValuationError("k must be positive");
  if (k > limits.max_k || m.vertices.size() > limits.max_edges)
    throw ValuationError("k-valuation enumeration exceeds the configured limits");

  const std::size_t ne = m.edges.size();
  // Vertices become checkable once their highest-numbered slot edge is coloured.
  std::vector<std::vector<std::uint32_t>> ready(ne);
  for (std::uint32_t v = 0; v < m.vertices.size(); ++v) {
    std::uint32_t last = 0;
    for (auto id : m.vertices[v].slot_edge) last = std::max(last, id);
    ready[last].push_back(v);
  }
  KValuation phi{std::vector<std::uint8_t>(ne, 0), std::vector<std::uint8_t>(m.free_loops, 0)};

  const auto emit_loops = [&](const ConfigTally& tally) {
    // Odometer over free-loop colours; they carry no constraint.
    std::fill(phi.loop_colour.begin(), phi.loop_colour.end(), 0);
    while (true) {
      f(static_cast<const KValuation&>(phi), tally);
      std::size_t i = 0;
      while (i < phi.loop_colour.size() && ++phi.loop_colour[i] == k) phi.loop_colour[i++] = 0;
      if (i == phi.loop_colour.size()) break;
    }
  };

  std::vector<ConfigTally> tally_at(ne + 1);
  const auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == ne) {
      emit_loops(tally_at[ne]);
      return;
    }
    for (unsigned c = 0; c < k; ++c) {
      phi.edge_colour[i] = static_cast<std::uint8_t>(c);
      ConfigTally t = tally_at[i];
      bool ok = true;
      for (auto v : ready[i]) {
        const auto& mv = m.vertices[v];
        const auto col = detail::slot_colours(mv, phi.edge_colour);
        if (mv.singular) {
          ok = col[0] == col[1] && col[1] == col[2] && col[2] == col[3];
        } else if (!detail::even_at(col)) {
          ok = false;
        } else {
          switch (classify_vertex(m, phi, v)) {
            case Config::Total: ++t.total; break;
            case Config::White: ++t.white; break;
            case Config::Black: ++t.black; break;
            case Config::Crossing: ++t.crossing; break;
          }
        }
        if (!ok) break;
      }
      if (!ok) continue;
      tally_at[i + 1] = t;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
}

inline std::vector<std::pair<KValuation, ConfigTally>> enumerate_k_valuations(const MedialGraph& m, unsigned k,
                                                                             const EnumerationLimits& limits = {}) {
  std::vector<std::pair<KValuation, ConfigTally>> out;
  for_each_k_valuation(
      m, k, [&](const KValuation& phi, const ConfigTally& t) { out.emplace_back(phi, t); }, limits);
  return out;
}

/// Number of k-valuations per configuration tally.
inline std::map<ConfigTally, std::uint64_t> tally_histogram(const MedialGraph& m, unsigned k,
                                                            const EnumerationLimits& limits = {}) {
  std::map<ConfigTally, std::uint64_t> h;
  for_each_k_valuation(
      m, k, [&](const KValuation&, const ConfigTally& t) { ++h[t]; }, limits);
  return h;
}

struct Weights {
  long long w = 1, x = 1, y = 1, z = 1;
};

/// Sum over tallies of count * w^tot x^wh y^bl z^cr.
inline BigInt weigh_histogram(const std::map<ConfigTally, std::uint64_t>& h, const Weights& wt) {
  using boost::multiprecision::pow;
  BigInt sum = 0;
  for (const auto& [t, n] : h)
    sum += BigInt(n) * pow(BigInt(wt.w), t.total) * pow(BigInt(wt.x), t.white) * pow(BigInt(wt.y), t.black) *
           pow(BigInt(wt.z), t.crossing);
  return sum;
}

/// Omega_k(H; w, x, y, z) by direct enumeration of k-valuations of the medial graph.
inline BigInt omega_k_bruteforce(const RibbonGraph& h, unsigned k, const Weights& wt,
                                 const EnumerationLimits& limits = {}) {
  return weigh_histogram(tally_histogram(build_medial(h), k, limits), wt);
}

inline std::uint64_t k_valuation_count(const RibbonGraph& h, unsigned k, const EnumerationLimits& limits = {}) {
  std::uint64_t n = 0;
  for (const auto& [t, c] : tally_histogram(build_medial(h), k, limits)) n += c;
  return n;
}

/// k-valuations with no black vertex.
inline std::uint64_t admissible_count(const RibbonGraph& g, unsigned k, const EnumerationLimits& limits = {}) {
  std::uint64_t n = 0;
  for (const auto& [t, c] : tally_histogram(build_medial(g), k, limits))
    if (t.black == 0) n += c;
  return n;
}

/// Q(G; (alpha, beta, gamma), t): every medial vertex is smoothed by its white,
/// black, or crossing pairing with weight alpha, beta, gamma, and each state
/// contributes t^(closed curves). Curves are counted with a union-find over slots.
inline BigInt transition_poly_bruteforce(const RibbonGraph& g, long long alpha, long long beta, long long gamma,
                                         long long t_val) {
  if (g.has_singular_edges()) throw GraphError("transition polynomial: ribbon graphs only");
  const MedialGraph m = build_medial(g);
  const std::size_t nv = m.vertices.size();
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < nv; ++i) states *= 3;
  const std::array<BigInt, 3> weight{BigInt(alpha), BigInt(beta), BigInt(gamma)};
  BigInt sum = 0;
  std::vector<std::uint8_t> choice(nv, 0);
  for (std::uint64_t s = 0; s < states; ++s) {
    std::uint64_t c = s;
    for (std::size_t i = 0; i < nv; ++i, c /= 3) choice[i] = static_cast<std::uint8_t>(c % 3);
    UnionFind uf(4 * nv);
    for (const auto& me : m.edges) uf.unite(4 * me.ends[0].vertex + me.ends[0].slot, 4 * me.ends[1].vertex + me.ends[1].slot);
    BigInt wgt = 1;
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& mv = m.vertices[v];
      const Pairing& p = choice[v] == 0 ? mv.white : choice[v] == 1 ? mv.black : mv.crossing;
      uf.unite(4 * v + p[0][0], 4 * v + p[0][1]);
      uf.unite(4 * v + p[1][0], 4 * v + p[1][1]);
      wgt *= weight[choice[v]];
    }
    if (wgt == 0) continue;
    const std::size_t curves = uf.classes() + m.free_loops;
    sum += wgt * boost::multiprecision::pow(BigInt(t_val), static_cast<unsigned>(curves));
  }
  return sum;
}

}  // namespace ribbon
