#include <catch_amalgamated.hpp>

#include "ribbon/catalog.hpp"
#include "ribbon/medial.hpp"
#include "ribbon/specializations.hpp"

using namespace ribbon;

namespace {

RibbonGraph named(const std::string& n) { return find_instance(n)->graph(); }

MultiPoly lam(const std::vector<long long>& c) { return poly_in_t(c); }

const AbstractGraph kTriangle{3, {{0, 1}, {1, 2}, {2, 0}}};
const AbstractGraph kLoop{1, {{0, 0}}};
const AbstractGraph kEdge{2, {{0, 1}}};
const AbstractGraph kK4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

TEST_CASE("pointed Penrose") {
  CHECK(pointed_penrose(named("I3")) == lam({0, 0, 0, 1}));
  CHECK(pointed_penrose(named("B1t")) == lam({0, -1, 1}));
  CHECK(pointed_penrose(named("E1")).is_zero());
}

TEST_CASE("topological Penrose") {
  CHECK(topological_penrose(named("B1")) == lam({0, -1, 1}));
  CHECK(topological_penrose(named("B1t")) == lam({0, 1, -1}));
  CHECK(topological_penrose(named("I3")) == lam({0, 0, 0, 1}));
  CHECK_THROWS_AS(topological_penrose(contract_to_point(named("E1"), "e1")), GraphError);
}

TEST_CASE("chromatic polynomial") {
  // l (l - 1) (l - 2) = l^3 - 3 l^2 + 2 l
  CHECK(chromatic_poly(kTriangle) == lam({0, 2, -3, 1}));
  CHECK(chromatic_poly(kLoop).is_zero());
  CHECK(chromatic_poly(kEdge) == lam({0, -1, 1}));
  CHECK(chromatic_poly(AbstractGraph{2, {{0, 1}, {0, 1}}}) == lam({0, -1, 1}));
}

TEST_CASE("petrial chromatic sums") {
  CHECK(petrial_chromatic_sum(named("B1t"), false) == lam({0, -1, 1}));
  CHECK(petrial_chromatic_sum(named("B1"), true) == lam({0, -1, 1}));
  CHECK(petrial_chromatic_sum(named("B1"), true) == topological_penrose(named("B1")));
  for (const auto& c : named_instances()) {
    const RibbonGraph g = c.graph();
    if (g.edge_count() > 4) continue;
    INFO(c.name);
    CHECK(petrial_chromatic_sum(g, false) == pointed_penrose(g));
    CHECK(petrial_chromatic_sum(g, true) == topological_penrose(g));
  }
}

TEST_CASE("tutte polynomial") {
  const MultiPoly x = MultiPoly::var(Var::X), y = MultiPoly::var(Var::Y);
  CHECK(tutte_poly(kEdge) == x);
  CHECK(tutte_poly(kLoop) == y);
  CHECK(tutte_poly(kTriangle) == x * x + x + y);
  // T(K4; 1, 1) counts the 16 spanning trees.
  CHECK(poly_eval(tutte_poly(kK4), Assignment::all(0, 1, 1, 0, 0)).constant() == 16);
}

TEST_CASE("edge 3-colourings") {
  CHECK(edge_3_colouring_count(underlying_graph(named("THETA"))) == 6);
  CHECK(edge_3_colouring_count(kK4) == 6);
  CHECK(edge_3_colouring_count(AbstractGraph{3, {{0, 1}, {1, 2}}}) == 6);
  CHECK(edge_3_colouring_count(kLoop) == 0);
  CHECK(is_cubic(kK4));
  CHECK(is_cubic(underlying_graph(named("THETA"))));
  CHECK_FALSE(is_cubic(kTriangle));
}

TEST_CASE("pointed Penrose at 3 counts edge 3-colourings of cubic graphs") {
  for (const char* n : {"THETA", "K4P", "K4NP", "DUMBBELL"}) {
    INFO(n);
    const RibbonGraph g = named(n);
    REQUIRE(is_cubic(underlying_graph(g)));
    const BigInt at3 = poly_eval(pointed_penrose(g), Assignment{}.set(Var::T, 3)).constant();
    CHECK(at3 == BigInt(edge_3_colouring_count(underlying_graph(g))));
  }
  // Any twisting of a cubic embedding keeps the count.
  for (std::uint64_t mask = 0; mask < 64; mask += 7) {
    GraphDocument doc = find_instance("K4P")->document;
    for (std::size_t i = 0; i < doc.edges.size(); ++i) doc.edges[i].twisted = (mask >> i & 1U) != 0;
    const RibbonGraph g = RibbonGraph::from_document(doc);
    CHECK(poly_eval(pointed_penrose(g), Assignment{}.set(Var::T, 3)).constant() == 6);
  }
}

TEST_CASE("plane graphs: pointed Penrose equals Penrose; B1t separates them") {
  for (const auto& c : named_instances()) {
    if (!c.expected.plane) continue;
    INFO(c.name);
    CHECK(pointed_penrose(c.graph()) == topological_penrose(c.graph()));
  }
  CHECK(pointed_penrose(named("B1t")) != topological_penrose(named("B1t")));
}

TEST_CASE("transition specialization") {
  const MultiPoly q = transition_polynomial(named("THETA"), 1, 2, 3);
  for (long long tv = -2; tv <= 3; ++tv)
    CHECK(poly_eval(q, Assignment{}.set(Var::T, tv)).constant() == transition_poly_bruteforce(named("THETA"), 1, 2, 3, tv));
}

TEST_CASE("Tutte spot check on plane graphs") {
  for (const char* n : {"E1", "THETA", "K4P", "DIGON"}) {
    INFO(n);
    const RibbonGraph g = named(n);
    const BigInt lhs = poly_eval(omega_recursive(g).polynomial, Assignment::all(0, 2, 1, 0, 2)).constant();
    const BigInt tutte = poly_eval(tutte_poly(underlying_graph(g)), Assignment::all(0, 2, 5, 0, 0)).constant();
    CHECK(lhs == boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(g.vertex_count())) * tutte);
  }
}
