#pragma once

// Named specializations of Omega and the classical polynomials they are compared with.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/engine.hpp"
#include "ribbon/operations.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

/// Omega(H; -2, 1, 0, 1, lambda), lambda carried by t.
inline MultiPoly pointed_penrose(const RibbonGraph& h) {
  return poly_eval(omega_recursive(h).polynomial, Assignment::wxyz(-2, 1, 0, 1));
}

/// Omega(G; 0, 1, 0, -1, lambda).
inline MultiPoly topological_penrose(const RibbonGraph& g) {
  if (g.has_singular_edges()) throw GraphError("topological_penrose: ribbon graphs only");
  return poly_eval(omega_recursive(g).polynomial, Assignment::wxyz(0, 1, 0, -1));
}

/// Omega(G; 0, alpha, beta, gamma, t): the transition polynomial in t.
inline MultiPoly transition_polynomial(const RibbonGraph& g, long long alpha, long long beta, long long gamma) {
  if (g.has_singular_edges()) throw GraphError("transition_polynomial: ribbon graphs only");
  return poly_eval(omega_recursive(g).polynomial, Assignment::wxyz(0, alpha, beta, gamma));
}

namespace detail {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

inline std::string graph_key(std::size_t n, EdgeList edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  std::string k = std::to_string(n) + ":";
  for (const auto& [a, b] : edges) k += std::to_string(a) + "-" + std::to_string(b) + ",";
  return k;
}

/// Merges vertex b into a and renumbers the vertices above b.
inline EdgeList contract_pair(const EdgeList& edges, std::size_t skip, std::size_t a, std::size_t b) {
  EdgeList out;
  const auto relabel = [&](std::size_t v) {
    if (v == b) v = a;
    return v > b ? v - 1 : v;
  };
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != skip) out.emplace_back(relabel(edges[i].first), relabel(edges[i].second));
  return out;
}

inline EdgeList without(const EdgeList& edges, std::size_t skip) {
  EdgeList out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != skip) out.push_back(edges[i]);
  return out;
}

class ChromaticMemo {
 public:
  MultiPoly run(std::size_t n, EdgeList edges) {
    for (const auto& [a, b] : edges)
      if (a == b) return MultiPoly{};
    // Parallel edges do not change proper colourings.
    for (auto& [a, b] : edges)
      if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) return t_power(static_cast<std::uint32_t>(n));
    const std::string key = graph_key(n, edges);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto [a, b] = edges.front();
    MultiPoly r = run(n, without(edges, 0)) - run(n - 1, contract_pair(edges, 0, a, b));
    cache_.emplace(key, r);
    return r;
  }

 private:
  std::map<std::string, MultiPoly> cache_;
};

inline bool connected_without(std::size_t n, const EdgeList& edges, std::size_t skip, std::size_t from,
                              std::size_t to) {
  UnionFind uf(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (i != skip) uf.unite(edges[i].first, edges[i].second);
  return uf.find(from) == uf.find(to);
}

class TutteMemo {
 public:
  MultiPoly run(std::size_t n, const EdgeList& edges) {
    if (edges.empty()) return MultiPoly(1);
    const std::string key = graph_key(n, edges);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const auto [a, b] = edges.front();
    MultiPoly r;
    if (a == b) {
      r = MultiPoly::var(Var::Y) * run(n, without(edges, 0));
    } else if (!connected_without(n, edges, 0, a, b)) {
      r = MultiPoly::var(Var::X) * run(n - 1, contract_pair(edges, 0, a, b));
    } else {
      r = run(n, without(edges, 0)) + run(n - 1, contract_pair(edges, 0, a, b));
    }
    cache_.emplace(key, r);
    return r;
  }

 private:
  std::map<std::string, MultiPoly> cache_;
};

}  // namespace detail

/// Chromatic polynomial in t (standing for lambda) by deletion-contraction.
inline MultiPoly chromatic_poly(const AbstractGraph& g) {
  detail::ChromaticMemo memo;
  return memo.run(g.vertex_count, g.edges);
}

/// Tutte polynomial T(G; x, y) by deletion-contraction, in the variables x and y.
inline MultiPoly tutte_poly(const AbstractGraph& g) {
  detail::TutteMemo memo;
  return memo.run(g.vertex_count, g.edges);
}

/// Sum over A of chi of the dual of the partial Petrial at A; with `sign`, weighted by (-1)^|A|.
inline MultiPoly petrial_chromatic_sum(const RibbonGraph& g, bool sign) {
  if (g.has_singular_edges()) throw GraphError("petrial_chromatic_sum: ribbon graphs only");
  const auto edges = g.edge_indices();
  if (edges.size() > 20) throw LimitExceeded("petrial_chromatic_sum: too many edges");
  MultiPoly sum;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<EdgeIndex> subset;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (mask >> i & 1U) subset.push_back(edges[i]);
    const MultiPoly chi = chromatic_poly(underlying_graph(geometric_dual(partial_petrial(g, subset))));
    if (sign && subset.size() % 2 == 1)
      sum -= chi;
    else
      sum += chi;
  }
  return sum;
}

/// Proper edge 3-colourings by exhaustion. A loop meets its own vertex twice, so it admits none.
inline std::uint64_t edge_3_colouring_count(const AbstractGraph& g) {
  const std::size_t m = g.edges.size();
  if (m > 20) throw LimitExceeded("edge_3_colouring_count: too many edges");
  for (const auto& [a, b] : g.edges)
    if (a == b) return 0;
  std::vector<std::vector<std::size_t>> incident(g.vertex_count);
  for (std::size_t i = 0; i < m; ++i) {
    incident[g.edges[i].first].push_back(i);
    incident[g.edges[i].second].push_back(i);
  }
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < m; ++i) states *= 3;
  std::vector<unsigned> colour(m, 0);
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < states; ++s) {
    std::uint64_t c = s;
    for (std::size_t i = 0; i < m; ++i, c /= 3) colour[i] = static_cast<unsigned>(c % 3);
    bool proper = true;
    for (const auto& inc : incident) {
      unsigned used = 0;
      for (std::size_t e : inc) {
        const unsigned bit = 1U << colour[e];
        if (used & bit) {
          proper = false;
          break;
        }
        used |= bit;
      }
      if (!proper) break;
    }
    count += proper ? 1 : 0;
  }
  return count;
}

inline bool is_cubic(const AbstractGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count, 0);
  for (const auto& [a, b] : g.edges) {
    ++deg[a];
    ++deg[b];
  }
  return !deg.empty() && std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 3; });
}

}  // namespace ribbon
