#include <catch_amalgamated.hpp>

#include "ribbon/catalog.hpp"
#include "ribbon/engine.hpp"

using namespace ribbon;

namespace {

RibbonGraph named(const std::string& n) { return find_instance(n)->graph(); }

MultiPoly w() { return MultiPoly::var(Var::W); }
MultiPoly x() { return MultiPoly::var(Var::X); }
MultiPoly y() { return MultiPoly::var(Var::Y); }
MultiPoly z() { return MultiPoly::var(Var::Z); }
MultiPoly t(std::uint32_t n = 1) { return MultiPoly::var(Var::T, n); }

/// Coefficient of t^2 as a polynomial in w, x, y, z.
MultiPoly t2_part(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [e, c] : p.terms())
    if (e[4] == 2) out.add_term({e[0], e[1], e[2], e[3], 0}, c);
  return out;
}

void both_engines(const RibbonGraph& g, const MultiPoly& expected) {
  CHECK(omega_state_sum(g).polynomial == expected);
  CHECK(omega_recursive(g).polynomial == expected);
}

}  // namespace

TEST_CASE("worked values") {
  both_engines(named("I3"), t(3));
  both_engines(named("E1"), (w() + x() + z()) * t() + y() * t(2));
  both_engines(named("B1"), (w() + y() + z()) * t() + x() * t(2));
  both_engines(named("B1t"), (w() + x() + y()) * t() + z() * t(2));
  CHECK(omega_recursive(named("THETA")).polynomial == omega_state_sum(named("THETA")).polynomial);
}

TEST_CASE("two-edge worked graphs") {
  // The plane digon and the one-vertex torus graph carry the t^2 parts
  // x^2 + y^2 + z^2 and 2xy + z^2 respectively.
  CHECK(t2_part(omega_recursive(named("DIGON")).polynomial) == x() * x() + y() * y() + z() * z());
  CHECK(t2_part(omega_recursive(named("TWO_LOOPS")).polynomial) == MultiPoly(2) * x() * y() + z() * z());
}

TEST_CASE("omega_k polynomial") {
  CHECK(omega_k_polynomial(named("E1")) == (w() - y()) * t() + y() * t(2));
  CHECK(omega_k_polynomial(named("I3")) == t(3));
  CHECK(omega_k_polynomial(named("B1")) == (w() - x()) * t() + x() * t(2));
}

TEST_CASE("state sum statistics are deterministic") {
  const auto r = omega_state_sum(named("THETA"));
  CHECK(r.stats.partitions == 64);
  CHECK(r.method == Method::StateSum);
  CHECK(std::string(method_name(r.method)) == "statesum");
  StateSumOptions one;
  one.threads = 1;
  CHECK(omega_state_sum(named("K4P"), one).polynomial == omega_state_sum(named("K4P")).polynomial);
}

TEST_CASE("state sum refuses large inputs") {
  StateSumOptions small;
  small.max_edges = 2;
  CHECK_THROWS_AS(omega_state_sum(named("THETA"), small), LimitExceeded);
}

TEST_CASE("engines agree and recursion ignores the edge order") {
  std::vector<RibbonGraph> graphs;
  for (const auto& c : named_instances()) graphs.push_back(c.graph());
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    graphs.push_back(random_instance(1 + seed % 4, seed % 6, seed, seed % 5 == 0 && seed % 6 ? 1 : 0));
  for (const auto& g : graphs) {
    const MultiPoly ref = omega_recursive(g).polynomial;
    CHECK(omega_state_sum(g).polynomial == ref);
    for (std::uint64_t s = 1; s <= 3; ++s) {
      RecursiveOptions ro;
      ro.choice = {EdgeChoice::Rule::RandomOrder, s * 977};
      ro.memoize = s != 2;
      CHECK(omega_recursive(g, ro).polynomial == ref);
    }
    RecursiveOptions lowest;
    lowest.choice.rule = EdgeChoice::Rule::LowestIndex;
    CHECK(omega_recursive(g, lowest).polynomial == ref);
  }
}

TEST_CASE("homogeneity and t-degree bound") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RibbonGraph g = random_instance(1 + seed % 4, seed % 6, seed, seed % 3 == 1 ? 1 : 0);
    const MultiPoly p = omega_recursive(g).polynomial;
    std::size_t max_boundary = 0;
    const auto edges = g.non_singular_edges();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * edges.size())); ++code) {
      RibbonGraph r = g;
      for (std::size_t i = 0; i < edges.size(); ++i) r = apply_op(r, static_cast<EdgeOp>((code >> (2 * i)) & 3U), edges[i]);
      max_boundary = std::max(max_boundary, pinched_boundary_count(r));
    }
    for (const auto& [e, c] : p.terms()) CHECK(e[0] + e[1] + e[2] + e[3] == edges.size());
    CHECK(p.degree(Var::T) <= max_boundary);
  }
}

TEST_CASE("multiplicativity over disjoint union") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const RibbonGraph a = random_instance(1 + seed % 3, seed % 4, seed);
    const RibbonGraph b = random_instance(1 + (seed + 1) % 3, (seed + 2) % 4, seed + 1000, seed % 4 == 3 ? 1 : 0);
    const RibbonGraph u = disjoint_union(a, b);
    CHECK(u.vertex_count() == a.vertex_count() + b.vertex_count());
    CHECK(omega_recursive(u).polynomial == omega_recursive(a).polynomial * omega_recursive(b).polynomial);
  }
}

TEST_CASE("edgeless pinched objects: t^components is t^pinched boundary") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 1 + seed % 4;
    const RibbonGraph g = random_instance(1 + seed % 4, m, seed, m);
    CHECK(g.non_singular_edge_count() == 0);
    CHECK(connected_component_count(g) == pinched_boundary_count(g));
    CHECK(omega_recursive(g).polynomial == t(static_cast<std::uint32_t>(pinched_boundary_count(g))));
    CHECK(omega_state_sum(g).polynomial == omega_recursive(g).polynomial);
  }
}

TEST_CASE("single isolated vertex") {
  CHECK(omega_recursive(random_instance(1, 0, 42)).polynomial == t());
}
