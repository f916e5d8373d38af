#pragma once

// Two independent evaluators of Omega: the sum over ordered partitions of the
// edge set, and the four-term deletion-contraction recursion.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ribbon/operations.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"

namespace ribbon {

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { StateSum, Recursive };

inline const char* method_name(Method m) { return m == Method::StateSum ? "statesum" : "recursive"; }

struct OmegaStats {
  std::uint64_t partitions = 0;  // state sum: partitions evaluated
  std::uint64_t calls = 0;       // recursion: nodes expanded
  std::uint64_t cache_hits = 0;
};

struct OmegaResult {
  MultiPoly polynomial;
  Method method = Method::StateSum;
  OmegaStats stats;
};

struct StateSumOptions {
  std::size_t max_edges = 14;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

struct TallyKey {
  std::array<std::uint8_t, 4> blocks{};
  std::uint32_t boundary = 0;
  friend auto operator<=>(const TallyKey&, const TallyKey&) = default;
};
using Tally = std::map<TallyKey, std::uint64_t>;

inline void state_sum_range(const RibbonGraph& g, const std::vector<EdgeIndex>& edges, std::uint64_t begin,
                            std::uint64_t end, Tally& tally) {
  const std::size_t n = edges.size();
  for (std::uint64_t code = begin; code < end; ++code) {
    TallyKey key;
    RibbonGraph r = g;
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c >>= 2) {
      const auto op = static_cast<EdgeOp>(c & 3U);
      ++key.blocks[c & 3U];
      r = apply_op(r, op, edges[i]);
    }
    key.boundary = static_cast<std::uint32_t>(pinched_boundary_count(r));
    ++tally[key];
  }
}

}  // namespace detail

/// Sum over all 4^n ordered partitions (A,B,C,D) of the ordinary edges of
/// w^|A| x^|B| y^|C| z^|D| t^boundary(G[A,B,C,D]). Digit i of the base-4 counter
/// assigns edge i (in index order) to block A, B, C or D.
inline OmegaResult omega_state_sum(const RibbonGraph& g, const StateSumOptions& opts = {}) {
  const std::vector<EdgeIndex> edges = g.non_singular_edges();
  if (edges.size() > opts.max_edges)
    throw LimitExceeded("state sum refused: " + std::to_string(edges.size()) + " edges exceeds limit " +
                        std::to_string(opts.max_edges));
  const std::uint64_t total = std::uint64_t{1} << (2 * edges.size());
  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 256)));

  std::vector<detail::Tally> tallies(threads);
  if (threads == 1) {
    detail::state_sum_range(g, edges, 0, total, tallies[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::uint64_t b = std::min(total, i * chunk);
      const std::uint64_t e = std::min(total, b + chunk);
      pool.emplace_back([&, i, b, e] { detail::state_sum_range(g, edges, b, e, tallies[i]); });
    }
    for (auto& t : pool) t.join();
  }
  detail::Tally merged;
  for (const auto& t : tallies)
    for (const auto& [k, n] : t) merged[k] += n;

  OmegaResult res;
  res.method = Method::StateSum;
  res.stats.partitions = total;
  for (const auto& [k, n] : merged) {
    Exponents e{k.blocks[0], k.blocks[1], k.blocks[2], k.blocks[3], k.boundary};
    res.polynomial.add_term(e, BigInt(n));
  }
  return res;
}

/// How the recursion picks the next edge. Any rule gives the same polynomial.
struct EdgeChoice {
  enum class Rule { NonLoopFirst, LowestIndex, RandomOrder };
  Rule rule = Rule::NonLoopFirst;
  std::uint64_t seed = 0;  // RandomOrder: a random priority per edge
};

struct RecursiveOptions {
  EdgeChoice choice{};
  bool memoize = true;
};

namespace detail {

class Recursion {
 public:
  Recursion(const RibbonGraph& g, const RecursiveOptions& opts) : opts_(opts) {
    if (opts.choice.rule == EdgeChoice::Rule::RandomOrder) {
      priority_.resize(g.edge_slots());
      std::iota(priority_.begin(), priority_.end(), 0U);
      std::mt19937_64 rng(opts.choice.seed);
      for (std::size_t i = priority_.size(); i > 1; --i) std::swap(priority_[i - 1], priority_[rng() % i]);
    }
  }

  MultiPoly run(const RibbonGraph& g) {
    ++stats.calls;
    const auto edges = g.non_singular_edges();
    if (edges.empty()) return t_power(static_cast<std::uint32_t>(connected_component_count(g)));
    std::string key;
    if (opts_.memoize) {
      key = g.key();
      if (auto it = cache_.find(key); it != cache_.end()) {
        ++stats.cache_hits;
        return it->second;
      }
    }
    const EdgeIndex e = choose(g, edges);
    MultiPoly r = MultiPoly::var(Var::W) * run(contract_to_point(g, e));
    r += MultiPoly::var(Var::X) * run(contract_edge(g, e));
    r += MultiPoly::var(Var::Y) * run(delete_edge(g, e));
    r += MultiPoly::var(Var::Z) * run(penrose_contract(g, e));
    if (opts_.memoize) cache_.emplace(std::move(key), r);
    return r;
  }

  OmegaStats stats;

 private:
  EdgeIndex choose(const RibbonGraph& g, const std::vector<EdgeIndex>& edges) const {
    switch (opts_.choice.rule) {
      case EdgeChoice::Rule::LowestIndex: return edges.front();
      case EdgeChoice::Rule::RandomOrder:
        return *std::min_element(edges.begin(), edges.end(),
                                 [&](EdgeIndex a, EdgeIndex b) { return priority_[a] < priority_[b]; });
      case EdgeChoice::Rule::NonLoopFirst: break;
    }
    const auto places = g.dart_places();
    for (EdgeIndex e : edges)
      if (places[Dart::of(e, 0).value].vertex != places[Dart::of(e, 1).value].vertex) return e;
    return edges.front();
  }

  RecursiveOptions opts_;
  std::vector<std::uint32_t> priority_;
  std::unordered_map<std::string, MultiPoly> cache_;
};

}  // namespace detail

/// Omega(G) = w Omega(G.e) + x Omega(G/e) + y Omega(G-e) + z Omega(G penrose e);
/// t^components once no ordinary edge remains.
inline OmegaResult omega_recursive(const RibbonGraph& g, const RecursiveOptions& opts = {}) {
  detail::Recursion rec(g, opts);
  OmegaResult res;
  res.polynomial = rec.run(g);
  res.method = Method::Recursive;
  res.stats = rec.stats;
  return res;
}

inline OmegaResult omega(const RibbonGraph& g, Method m) {
  return m == Method::StateSum ? omega_state_sum(g) : omega_recursive(g);
}

/// Omega_k as a polynomial with t standing for k: w is replaced by w - x - y - z.
inline MultiPoly omega_k_polynomial(const RibbonGraph& g) { return poly_subst_w(omega_recursive(g).polynomial); }

}  // namespace ribbon
