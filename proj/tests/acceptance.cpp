// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

namespace {

using Clock = std::chrono::steady_clock;

RibbonGraph named(const std::string& n) { return find_instance(n)->graph(); }

MultiPoly w() { return MultiPoly::var(Var::W); }
MultiPoly x() { return MultiPoly::var(Var::X); }
MultiPoly y() { return MultiPoly::var(Var::Y); }
MultiPoly z() { return MultiPoly::var(Var::Z); }
MultiPoly t(std::uint32_t n = 1) { return MultiPoly::var(Var::T, n); }

struct Outcome {
  bool passed = true;
  std::size_t checks = 0;
  std::string note;
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) note = what;
    passed = passed && ok;
  }
};

struct Instance {
  std::string name;
  RibbonGraph graph;
};

std::vector<Instance> catalog() {
  std::vector<Instance> out;
  for (const auto& c : named_instances()) out.push_back({c.name, c.graph()});
  return out;
}

/// 50 seeded random instances with at most 5 edges; a fifth carry one singular edge.
std::vector<Instance> random_set() {
  std::vector<Instance> out;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t edges = i % 6;
    const std::size_t singular = (i % 5 == 4 && edges > 0) ? 1 : 0;
    out.push_back({"random#" + std::to_string(i), random_instance(1 + i % 4, edges, 9000 + i, singular)});
  }
  return out;
}

std::vector<Instance> small_set() {
  std::vector<Instance> out;
  for (auto& i : catalog())
    if (i.graph.edge_count() <= 4) out.push_back(i);
  for (auto& i : random_set())
    if (i.graph.edge_count() <= 4) out.push_back(i);
  return out;
}

Outcome c1() {
  Outcome o;
  const MultiPoly e1 = (w() + x() + z()) * t() + y() * t(2);
  o.require(omega_state_sum(named("I3")).polynomial == t(3), "statesum I3");
  o.require(omega_recursive(named("I3")).polynomial == t(3), "recursive I3");
  o.require(omega_state_sum(named("E1")).polynomial == e1, "statesum E1");
  o.require(omega_recursive(named("E1")).polynomial == e1, "recursive E1");
  return o;
}

Outcome c2() {
  Outcome o;
  const RibbonGraph theta = named("THETA");
  o.require(pinched_boundary_count(theta) == 3, "boundary THETA");
  o.require(pinched_boundary_count(contract_to_point(theta, "e2")) == 2, "boundary THETA . e2");
  return o;
}

Outcome c3() {
  Outcome o;
  auto set = catalog();
  for (auto& i : random_set()) set.push_back(i);
  for (const auto& i : set) {
    const MultiPoly ref = omega_recursive(i.graph).polynomial;
    o.require(omega_state_sum(i.graph).polynomial == ref, i.name + ": statesum != recursive");
    for (std::uint64_t s = 1; s <= 3; ++s) {
      RecursiveOptions ro;
      ro.choice = {EdgeChoice::Rule::RandomOrder, 31 * s + 7};
      o.require(omega_recursive(i.graph, ro).polynomial == ref, i.name + ": order dependence");
    }
  }
  return o;
}

Outcome c4() {
  Outcome o;
  for (const auto& i : small_set()) {
    const MultiPoly ok = omega_k_polynomial(i.graph);
    const MedialGraph m = build_medial(i.graph);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto hist = tally_histogram(m, k);
      for (const auto& wt : oracle_weight_tuples()) {
        const BigInt brute = weigh_histogram(hist, wt);
        const BigInt poly = poly_eval(ok, Assignment::all(wt.w, wt.x, wt.y, wt.z, k)).constant();
        o.require(brute == poly, i.name + " k=" + std::to_string(k) + ": " + brute.str() + " != " + poly.str());
      }
    }
  }
  return o;
}

Outcome c5() {
  Outcome o;
  for (const auto& i : small_set()) {
    const MultiPoly p = omega_recursive(i.graph).polynomial;
    for (unsigned k = 1; k <= 3; ++k) {
      const BigInt lhs = poly_eval(p, Assignment::all(-2, 1, 1, 1, k)).constant();
      o.require(lhs == BigInt(k_valuation_count(i.graph, k)), i.name + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome c6() {
  Outcome o;
  for (const auto& i : small_set()) {
    if (i.graph.has_singular_edges()) continue;
    o.require(petrial_chromatic_sum(i.graph, false) == pointed_penrose(i.graph), i.name + ": unsigned");
    o.require(petrial_chromatic_sum(i.graph, true) == topological_penrose(i.graph), i.name + ": signed");
  }
  return o;
}

Outcome c7() {
  Outcome o;
  for (const auto& c : named_instances()) {
    if (!c.expected.plane) continue;
    o.require(pointed_penrose(c.graph()) == topological_penrose(c.graph()), c.name);
  }
  const RibbonGraph b1t = named("B1t");
  o.require(pointed_penrose(b1t) == poly_in_t({0, -1, 1}), "P_p(B1t)");
  o.require(topological_penrose(b1t) == poly_in_t({0, 1, -1}), "P(B1t)");
  return o;
}

Outcome c8() {
  Outcome o;
  for (const char* n : {"THETA", "K4P", "K4NP"}) {
    const RibbonGraph g = named(n);
    const BigInt at3 = poly_eval(pointed_penrose(g), Assignment{}.set(Var::T, 3)).constant();
    const std::uint64_t brute = edge_3_colouring_count(underlying_graph(g));
    o.require(at3 == 6 && brute == 6, std::string(n) + ": P_p(3)=" + at3.str() + ", brute=" + std::to_string(brute));
  }
  return o;
}

Outcome c9() {
  Outcome o;
  std::mt19937_64 rng(404);
  const auto draw = [&](int lo, int hi) { return static_cast<long long>(lo + static_cast<int>(rng() % (hi - lo + 1))); };
  for (const auto& i : small_set()) {
    if (i.graph.has_singular_edges()) continue;
    const MultiPoly p = omega_recursive(i.graph).polynomial;
    for (int n = 0; n < 10; ++n) {
      const long long a = draw(-4, 4), b = draw(-4, 4), c = draw(-4, 4), tv = draw(-3, 4);
      o.require(poly_eval(p, Assignment::all(0, a, b, c, tv)).constant() == transition_poly_bruteforce(i.graph, a, b, c, tv),
                i.name);
    }
  }
  return o;
}

Outcome c10() {
  Outcome o;
  for (const char* n : {"E1", "THETA", "K4P", "DIGON"}) {
    const RibbonGraph g = named(n);
    const BigInt lhs = poly_eval(omega_recursive(g).polynomial, Assignment::all(0, 2, 1, 0, 2)).constant();
    const BigInt tutte = poly_eval(tutte_poly(underlying_graph(g)), Assignment::all(0, 2, 5, 0, 0)).constant();
    const BigInt rhs = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(g.vertex_count())) * tutte;
    o.require(lhs == rhs, std::string(n) + ": " + lhs.str() + " != " + rhs.str());
  }
  return o;
}

Outcome c11() {
  Outcome o;
  std::mt19937_64 rng(1100);
  const std::array<EdgeOp, 4> ops{EdgeOp::ToPoint, EdgeOp::Contract, EdgeOp::Delete, EdgeOp::Penrose};
  for (std::uint64_t i = 0; i < 30; ++i) {
    const RibbonGraph g = random_instance(1 + i % 3, 2 + i % 3, 11000 + i, i % 4 == 0 ? 1 : 0);
    const std::string name = "random#" + std::to_string(i);
    const MultiPoly p = omega_recursive(g).polynomial;
    for (const auto& [e, c] : p.terms())
      o.require(e[0] + e[1] + e[2] + e[3] == g.non_singular_edge_count(), name + ": homogeneity");

    const RibbonGraph h = random_instance(1 + (i + 1) % 3, i % 3, 12000 + i);
    o.require(omega_recursive(disjoint_union(g, h)).polynomial == p * omega_recursive(h).polynomial,
              name + ": multiplicativity");

    const RibbonGraph with_loops = disjoint_union(g, named("I3"));
    const unsigned k = 1 + static_cast<unsigned>(i % 3);
    const Weights wt{1, 2, -1, 3};
    o.require(omega_k_bruteforce(with_loops, k, wt) == omega_k_bruteforce(g, k, wt) * BigInt(k * k * k),
              name + ": free-loop factor");

    for (EdgeIndex e : g.edge_indices())
      o.require(partial_petrial(partial_petrial(g, e), e) == g, name + ": petrial involution");

    const auto ordinary = g.non_singular_edges();
    if (ordinary.size() >= 2) {
      const EdgeIndex e = ordinary[rng() % ordinary.size()];
      EdgeIndex f = e;
      while (f == e) f = ordinary[rng() % ordinary.size()];
      for (EdgeOp a : ops)
        for (EdgeOp b : ops) {
          const RibbonGraph ab = apply_op(apply_op(g, a, e), b, f);
          const RibbonGraph ba = apply_op(apply_op(g, b, f), a, e);
          o.require(connected_component_count(ab) == connected_component_count(ba) &&
                        pinched_boundary_count(ab) == pinched_boundary_count(ba) &&
                        ab.vertex_count() == ba.vertex_count() && ab.edge_count() == ba.edge_count() &&
                        ab.singular_edges() == ba.singular_edges() &&
                        omega_recursive(ab).polynomial == omega_recursive(ba).polynomial,
                    name + ": commutation");
        }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked values I3 and E1, both engines", 1, c1},
      {2, "pinched boundary of THETA and THETA . e2", 0, c2},
      {3, "engine equivalence and order independence", 10, c3},
      {4, "k-valuation oracle equals Omega_k", 60, c4},
      {5, "valuation count identity", 0, c5},
      {6, "chromatic-sum identities", 30, c6},
      {7, "plane Penrose agreement, B1t separation", 0, c7},
      {8, "edge 3-colourings of cubic embeddings", 0, c8},
      {9, "transition polynomial by curve counting", 0, c9},
      {10, "Tutte spot check on plane graphs", 0, c10},
      {11, "structural properties on random instances", 0, c11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.passed = false;
      o.note = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) o.require(false, "time limit exceeded");
    failures += o.passed ? 0 : 1;
    std::printf("%s criterion %2d: %s (%zu checks, %.3f s%s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                o.checks, secs,
                c.limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str() : "",
                o.passed ? "" : " -- ", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
