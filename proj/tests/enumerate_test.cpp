#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "scdeck/count.hpp"
#include "scdeck/enumerate.hpp"
#include "scdeck/graph6.hpp"
#include "test_graphs.hpp"

using namespace scdeck;

TEST_CASE("cycle types") {
  CHECK(antimorphism_cycle_types(4) == std::vector<CycleType>{{{4}}});
  CHECK(antimorphism_cycle_types(5) == std::vector<CycleType>{{{4, 1}}});
  CHECK(antimorphism_cycle_types(12) ==
        std::vector<CycleType>{{{12}}, {{8, 4}}, {{4, 4, 4}}});
  CHECK(antimorphism_cycle_types(9) == std::vector<CycleType>{{{8, 1}}, {{4, 4, 1}}});
  CHECK(antimorphism_cycle_types(6).empty());
  CHECK(antimorphism_cycle_types(7).empty());
  CHECK(antimorphism_cycle_types(1) == std::vector<CycleType>{{{1}}});
}

TEST_CASE("representative permutations use consecutive blocks") {
  CHECK(representative_permutation({{4}}) == Permutation{1, 2, 3, 0});
  CHECK(representative_permutation({{4, 1}}) == Permutation{1, 2, 3, 0, 4});
  CHECK(representative_permutation({{8, 4}}) ==
        Permutation{1, 2, 3, 4, 5, 6, 7, 0, 9, 10, 11, 8});
}

TEST_CASE("pair orbits of a 4-cycle") {
  const auto orbits = pair_orbits(Permutation{1, 2, 3, 0});
  REQUIRE(orbits.size() == 2);
  using P = std::pair<int, int>;
  CHECK(orbits[0].pairs == std::vector<P>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(orbits[1].pairs == std::vector<P>{{0, 2}, {1, 3}});
}

TEST_CASE("pair orbits with a fixed point") {
  const auto orbits = pair_orbits(Permutation{1, 2, 3, 0, 4});
  REQUIRE(orbits.size() == 3);
  using P = std::pair<int, int>;
  CHECK(orbits[2].pairs == std::vector<P>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

TEST_CASE("pair orbits cover every pair exactly once, all even") {
  for (int n : {4, 5, 8, 9, 12, 13}) {
    const auto types = antimorphism_cycle_types(n);
    for (const CycleType& ct : types) {
      const auto orbits = pair_orbits(representative_permutation(ct));
      std::set<std::pair<int, int>> seen;
      for (const PairOrbit& orbit : orbits) {
        CHECK(orbit.pairs.size() % 2 == 0);
        for (auto p : orbit.pairs) CHECK(seen.insert(p).second);
      }
      CHECK(seen.size() == static_cast<std::size_t>(n) * (n - 1) / 2);
    }
  }
}

TEST_CASE("odd orbits are rejected") {
  // A transposition fixes the pair {0,1}, an orbit of length 1.
  CHECK_THROWS_AS(pair_orbits(Permutation{1, 0}), std::logic_error);
}

TEST_CASE("graphs_for_permutation on a 4-cycle yields four copies of P4") {
  std::vector<Graph> yielded;
  graphs_for_permutation(Permutation{1, 2, 3, 0},
                         [&](const Graph& g) { yielded.push_back(g); });
  REQUIRE(yielded.size() == 4);
  const CanonicalCertificate p4 = canonical_form(testg::path(4));
  for (const Graph& g : yielded) {
    CHECK(canonical_form(g) == p4);
    CHECK(g.edge_count() == 3);
    CHECK(is_self_complementary(g));
  }
}

TEST_CASE("every streamed graph is self-complementary with n(n-1)/4 edges") {
  for (int n : {5, 8, 9}) {
    for (const CycleType& ct : antimorphism_cycle_types(n)) {
      int count = 0;
      graphs_for_permutation(representative_permutation(ct), [&](const Graph& g) {
        if (++count > 40) return;  // sample the head of the stream
        CHECK(g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 4);
        CHECK(is_self_complementary(g));
      });
      const auto orbits = pair_orbits(representative_permutation(ct));
      CHECK(count == 1 << orbits.size());
    }
  }
}

TEST_CASE("is_self_complementary") {
  CHECK(is_self_complementary(testg::path(4)));
  CHECK(is_self_complementary(testg::bull()));
  CHECK(is_self_complementary(Graph(1)));
  CHECK_FALSE(is_self_complementary(testg::complete(3)));
  CHECK_FALSE(is_self_complementary(testg::path(5)));
}

TEST_CASE("enumeration counts for small n") {
  CHECK(enumerate_sc(1).size() == 1);
  CHECK(enumerate_sc(4).size() == 1);
  CHECK(enumerate_sc(5).size() == 2);
  CHECK(enumerate_sc(8).size() == 10);
  CHECK(enumerate_sc(9).size() == 36);
  CHECK(enumerate_sc(2).empty());
  CHECK(enumerate_sc(6).empty());
  CHECK(enumerate_sc(7).empty());
}

TEST_CASE("enumeration size equals the counting formula") {
  for (int n : {1, 4, 5, 8, 9})
    CHECK(BigInt(enumerate_sc(n).size()) == sc_count(n).value);
}

TEST_CASE("enumerate_sc(4) is P4 and enumerate_sc(5) is C5 plus bull") {
  const auto four = enumerate_sc(4);
  REQUIRE(four.size() == 1);
  CHECK(are_isomorphic(four[0], testg::path(4)));
  const auto five = enumerate_sc(5);
  REQUIRE(five.size() == 2);
  CHECK((are_isomorphic(five[0], testg::cycle(5)) || are_isomorphic(five[1], testg::cycle(5))));
  CHECK((are_isomorphic(five[0], testg::bull()) || are_isomorphic(five[1], testg::bull())));
}

TEST_CASE("brute-force oracle matches for n <= 5") {
  for (int n : {1, 4, 5}) {
    // Filter all labeled graphs for self-complementarity by permutation
    // search, then group into classes, all without the canonical engine.
    std::vector<Graph> sc;
    for (const Graph& g : oracle::all_graphs(n))
      if (oracle::perm_isomorphic(g, complement(g))) sc.push_back(g);
    const std::vector<Graph> expected_classes = oracle::brute_iso_classes(sc);

    const std::vector<Graph> got = enumerate_sc(n);
    REQUIRE(got.size() == expected_classes.size());
    for (const Graph& rep : expected_classes) {
      int matches = 0;
      for (const Graph& g : got)
        if (oracle::perm_isomorphic(rep, g)) ++matches;
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("enumerated graphs satisfy the structural invariants") {
  for (int n : {4, 5, 8, 9}) {
    for (const Graph& g : enumerate_sc(n)) {
      CHECK(is_self_complementary(g));
      CHECK(g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 4);
      const Diameter d = diameter(g);
      CHECK((d == Diameter::finite(2) || d == Diameter::finite(3)));
      const DegreeSequence ds = degree_sequence(g);
      for (int i = 0; i < n; ++i)
        CHECK(ds.degrees[i] + ds.degrees[n - 1 - i] == n - 1);
    }
  }
}

TEST_CASE("output is sorted by certificate and worker-count independent") {
  const auto one = enumerate_sc(8, 1);
  const auto three = enumerate_sc(8, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == three[i]);
  for (std::size_t i = 1; i < one.size(); ++i)
    CHECK(canonical_form(one[i - 1]) < canonical_form(one[i]));
}
