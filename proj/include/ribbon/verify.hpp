#pragma once

// Identity suites run by `omega verify` and the acceptance tests. Every check
// compares two independently computed quantities and records both sides.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ribbon/engine.hpp"
#include "ribbon/medial.hpp"
#include "ribbon/polynomial.hpp"
#include "ribbon/ribbon_graph.hpp"
#include "ribbon/specializations.hpp"

namespace ribbon {

struct CheckResult {
  std::string suite;
  std::string check;
  std::string instance;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::size_t oracle_max_edges = 4;
  std::size_t corollary_max_edges = 8;
  std::vector<unsigned> ks{1, 2, 3};
  std::size_t order_trials = 3;
  std::size_t transition_tuples = 10;
  std::uint64_t seed = 2024;
};

/// Fixed integer weight tuples (w, x, y, z) for the k-valuation oracle.
inline const std::array<Weights, 5>& oracle_weight_tuples() {
  static const std::array<Weights, 5> tuples{{{1, 1, 1, 1}, {2, -1, 3, 0}, {-2, 1, 0, 1}, {0, 1, 0, -1}, {3, 2, -1, 5}}};
  return tuples;
}

namespace detail {
inline CheckResult compare(std::string suite, std::string check, const std::string& instance, const std::string& lhs,
                           const std::string& rhs) {
  return {std::move(suite), std::move(check), instance, lhs == rhs, lhs == rhs ? lhs : lhs + " != " + rhs};
}
}  // namespace detail

/// State sum against recursion, recursion under random edge orders, and homogeneity.
inline std::vector<CheckResult> verify_engines(const RibbonGraph& g, const std::string& name,
                                               const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  const MultiPoly ss = omega_state_sum(g).polynomial;
  const MultiPoly rec = omega_recursive(g).polynomial;
  out.push_back(detail::compare("engines", "statesum == recursive", name, ss.to_string(), rec.to_string()));
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.order_trials; ++i) {
    RecursiveOptions ro;
    ro.choice = {EdgeChoice::Rule::RandomOrder, rng()};
    ro.memoize = (i % 2) == 0;
    out.push_back(detail::compare("engines", "random edge order #" + std::to_string(i + 1), name,
                                  omega_recursive(g, ro).polynomial.to_string(), rec.to_string()));
  }
  bool homogeneous = true;
  const std::uint32_t n = static_cast<std::uint32_t>(g.non_singular_edge_count());
  for (const auto& [e, c] : rec.terms()) homogeneous = homogeneous && e[0] + e[1] + e[2] + e[3] == n;
  out.push_back({"engines", "homogeneous of degree |E|", name, homogeneous, std::to_string(n)});
  return out;
}

/// k-valuation enumeration against Omega_k, the valuation count, and (ribbon graphs only) the transition polynomial.
inline std::vector<CheckResult> verify_oracle(const RibbonGraph& g, const std::string& name,
                                              const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  if (g.edge_count() > opts.oracle_max_edges) return out;
  const MultiPoly omega_poly = omega_recursive(g).polynomial;
  const MultiPoly omega_k = poly_subst_w(omega_poly);
  const MedialGraph m = build_medial(g);
  for (unsigned k : opts.ks) {
    const auto hist = tally_histogram(m, k);
    for (const auto& wt : oracle_weight_tuples()) {
      const BigInt brute = weigh_histogram(hist, wt);
      const BigInt poly = poly_eval(omega_k, Assignment::all(wt.w, wt.x, wt.y, wt.z, k)).constant();
      out.push_back(detail::compare("oracle",
                                    "Omega_k k=" + std::to_string(k) + " at (" + std::to_string(wt.w) + "," +
                                        std::to_string(wt.x) + "," + std::to_string(wt.y) + "," +
                                        std::to_string(wt.z) + ")",
                                    name, brute.str(), poly.str()));
    }
    std::uint64_t count = 0;
    for (const auto& [t, c] : hist) count += c;
    const BigInt via_omega = poly_eval(omega_poly, Assignment::all(-2, 1, 1, 1, k)).constant();
    out.push_back(detail::compare("oracle", "valuation count k=" + std::to_string(k), name, std::to_string(count),
                                  via_omega.str()));
  }
  if (!g.has_singular_edges()) {
    std::mt19937_64 rng(opts.seed ^ 0x5eedULL);
    const auto draw = [&](int lo, int hi) { return static_cast<long long>(lo + static_cast<int>(rng() % (hi - lo + 1))); };
    for (std::size_t i = 0; i < opts.transition_tuples; ++i) {
      const long long a = draw(-3, 3), b = draw(-3, 3), c = draw(-3, 3), t = draw(-2, 3);
      const BigInt brute = transition_poly_bruteforce(g, a, b, c, t);
      const BigInt poly = poly_eval(omega_poly, Assignment::all(0, a, b, c, t)).constant();
      out.push_back(detail::compare("oracle",
                                    "transition at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + "; t=" + std::to_string(t) + ")",
                                    name, brute.str(), poly.str()));
    }
  }
  return out;
}

/// Chromatic-sum identities, plane Penrose agreement, edge 3-colourings, and the Tutte spot check.
inline std::vector<CheckResult> verify_corollaries(const RibbonGraph& g, const std::string& name,
                                                   const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  if (g.has_singular_edges() || g.edge_count() > opts.corollary_max_edges) return out;
  const MultiPoly omega_poly = omega_recursive(g).polynomial;
  const MultiPoly pointed = poly_eval(omega_poly, Assignment::wxyz(-2, 1, 0, 1));
  const MultiPoly penrose = poly_eval(omega_poly, Assignment::wxyz(0, 1, 0, -1));
  out.push_back(detail::compare("corollaries", "petrial chromatic sum == pointed Penrose", name,
                                petrial_chromatic_sum(g, false).to_string(), pointed.to_string()));
  out.push_back(detail::compare("corollaries", "signed petrial chromatic sum == Penrose", name,
                                petrial_chromatic_sum(g, true).to_string(), penrose.to_string()));
  const bool plane = total_euler_genus(g) == 0;
  if (plane) {
    out.push_back(
        detail::compare("corollaries", "plane: pointed Penrose == Penrose", name, pointed.to_string(), penrose.to_string()));
    const AbstractGraph ag = underlying_graph(g);
    const BigInt lhs = poly_eval(omega_poly, Assignment::all(0, 2, 1, 0, 2)).constant();
    const BigInt tutte = poly_eval(tutte_poly(ag), Assignment::all(0, 2, 5, 0, 0)).constant();
    const BigInt rhs = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(g.vertex_count())) * tutte;
    out.push_back(detail::compare("corollaries", "Omega(0,2,1,0,2) == 2^|V| T(2,5)", name, lhs.str(), rhs.str()));
  }
  const AbstractGraph ag = underlying_graph(g);
  if (is_cubic(ag)) {
    out.push_back(detail::compare("corollaries", "cubic: P_p(3) == edge 3-colourings", name,
                                  poly_eval(pointed, Assignment{}.set(Var::T, 3)).constant().str(),
                                  std::to_string(edge_3_colouring_count(ag))));
  }
  return out;
}

enum class Suite { All, Engines, Oracle, Corollaries };

inline std::vector<CheckResult> verify_instance(const RibbonGraph& g, const std::string& name, Suite suite,
                                                const VerifyOptions& opts = {}) {
  std::vector<CheckResult> out;
  const auto append = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  if (suite == Suite::All || suite == Suite::Engines) append(verify_engines(g, name, opts));
  if (suite == Suite::All || suite == Suite::Oracle) append(verify_oracle(g, name, opts));
  if (suite == Suite::All || suite == Suite::Corollaries) append(verify_corollaries(g, name, opts));
  return out;
}

}  // namespace ribbon
