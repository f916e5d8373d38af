#include <catch_amalgamated.hpp>

#include "ribbon/catalog.hpp"
#include "ribbon/engine.hpp"
#include "ribbon/medial.hpp"

using namespace ribbon;

namespace {

RibbonGraph named(const std::string& n) { return find_instance(n)->graph(); }

std::map<Config, int> tally_counts(const RibbonGraph& g, unsigned k) {
  std::map<Config, int> out;
  for (const auto& [phi, t] : enumerate_k_valuations(build_medial(g), k)) {
    out[Config::Total] += static_cast<int>(t.total);
    out[Config::White] += static_cast<int>(t.white);
    out[Config::Black] += static_cast<int>(t.black);
    out[Config::Crossing] += static_cast<int>(t.crossing);
  }
  return out;
}

}  // namespace

TEST_CASE("medial structure") {
  const MedialGraph e1 = build_medial(named("E1"));
  CHECK(e1.vertices.size() == 1);
  REQUIRE(e1.edges.size() == 2);
  for (const auto& e : e1.edges) CHECK(e.ends[0].vertex == e.ends[1].vertex);

  const MedialGraph i3 = build_medial(named("I3"));
  CHECK(i3.vertices.empty());
  CHECK(i3.free_loops == 3);

  const MedialGraph th = build_medial(named("THETA"));
  CHECK(th.vertices.size() == 3);
  CHECK(th.edges.size() == 6);
  std::vector<int> degree(3, 0);
  for (const auto& e : th.edges)
    for (const auto& end : e.ends) ++degree[end.vertex];
  CHECK(degree == std::vector<int>{4, 4, 4});
}

TEST_CASE("medial pairings are three distinct perfect matchings") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const RibbonGraph g = random_instance(1 + seed % 3, seed % 5, seed);
    const MedialGraph m = build_medial(g);
    CHECK(m.edges.size() == 2 * g.edge_count());
    CHECK(m.free_loops == g.isolated_vertex_count());
    for (const auto& v : m.vertices) {
      std::set<std::set<std::uint8_t>> pairs;
      for (const Pairing* p : {&v.black, &v.white, &v.crossing})
        for (const auto& pr : *p) pairs.insert({pr[0], pr[1]});
      CHECK(pairs.size() == 6);
      CHECK(v.black == Pairing{{{0, 1}, {2, 3}}});
    }
  }
}

TEST_CASE("classification") {
  const MedialGraph e1 = build_medial(named("E1"));
  CHECK(classify_vertex(e1, {{1, 1}, {}}, 0) == Config::Total);
  CHECK(classify_vertex(e1, {{0, 1}, {}}, 0) == Config::Black);
  const MedialGraph b1 = build_medial(named("B1"));
  // Two medial edges at a loop's vertex: the corners on either side of the loop.
  CHECK(classify_vertex(b1, {{0, 1}, {}}, 0) == Config::White);
  const MedialGraph b1t = build_medial(named("B1t"));
  CHECK(classify_vertex(b1t, {{0, 1}, {}}, 0) == Config::Crossing);
}

TEST_CASE("enumeration") {
  const auto e1 = enumerate_k_valuations(build_medial(named("E1")), 2);
  CHECK(e1.size() == 4);
  const auto c = tally_counts(named("E1"), 2);
  CHECK(c.at(Config::Total) == 2);
  CHECK(c.at(Config::Black) == 2);
  CHECK(c.at(Config::White) == 0);
  CHECK(c.at(Config::Crossing) == 0);

  const auto i3 = enumerate_k_valuations(build_medial(named("I3")), 3);
  CHECK(i3.size() == 27);
  for (const auto& [phi, t] : i3) CHECK(t == ConfigTally{});

  const auto ct = tally_counts(named("B1t"), 2);
  CHECK(ct.at(Config::Total) == 2);
  CHECK(ct.at(Config::Crossing) == 2);
  CHECK(ct.at(Config::Black) == 0);
}

TEST_CASE("valuations are distinct and satisfy the constraints") {
  const RibbonGraph g = contract_to_point(named("THETA"), "e2");
  const MedialGraph m = build_medial(g);
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& [phi, t] : enumerate_k_valuations(m, 3)) {
    CHECK(seen.insert(phi.edge_colour).second);
    for (const auto& v : m.vertices) {
      std::map<std::uint8_t, int> count;
      for (auto id : v.slot_edge) ++count[phi.edge_colour[id]];
      for (const auto& [col, n] : count) CHECK(n % 2 == 0);
      if (v.singular) CHECK(count.size() == 1);
    }
    CHECK(t.total + t.white + t.black + t.crossing == m.non_singular_vertex_count());
  }
}

TEST_CASE("brute-force Omega_k") {
  CHECK(omega_k_bruteforce(named("E1"), 3, {1, 1, 1, 1}) == 9);
  // Omega_k(E1) = w k + y (k^2 - k); at k = 2 this is 2w + 2y.
  CHECK(omega_k_bruteforce(named("E1"), 2, {1, 0, 0, 0}) == 2);
  CHECK(omega_k_bruteforce(named("E1"), 2, {0, 0, 1, 0}) == 2);
  CHECK(omega_k_bruteforce(named("E1"), 2, {5, 7, 3, 11}) == 2 * 5 + 2 * 3);
}

TEST_CASE("free loops multiply counts by k") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RibbonGraph g = random_instance(1 + seed % 3, 1 + seed % 3, seed, seed % 2);
    const RibbonGraph g_plus = disjoint_union(g, find_instance("I3")->graph());
    for (unsigned k = 1; k <= 3; ++k) {
      const Weights wt{2, -1, 3, 1};
      CHECK(omega_k_bruteforce(g_plus, k, wt) == omega_k_bruteforce(g, k, wt) * BigInt(k * k * k));
    }
  }
}

TEST_CASE("admissible counts") {
  CHECK(admissible_count(named("E1"), 2) == 2);
  CHECK(admissible_count(named("B1"), 2) == 4);
  CHECK(admissible_count(named("I3"), 2) == 8);
}

TEST_CASE("transition polynomial by curve counting") {
  CHECK(transition_poly_bruteforce(named("B1"), 1, 0, 0, 2) == 4);
  CHECK(transition_poly_bruteforce(named("E1"), 1, 1, 1, 1) == 3);
  CHECK(transition_poly_bruteforce(named("THETA"), 0, 0, 0, 5) == 0);
  CHECK(transition_poly_bruteforce(named("I3"), 0, 0, 0, 2) == 8);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(tally_histogram(build_medial(named("E1")), 5), ValuationError);
  CHECK_THROWS_AS(tally_histogram(build_medial(named("E1")), 0), ValuationError);
  CHECK_THROWS_AS(tally_histogram(build_medial(random_instance(2, 7, 1)), 2), ValuationError);
}
