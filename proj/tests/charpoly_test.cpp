#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "scdeck/charpoly.hpp"
#include "test_graphs.hpp"

using namespace scdeck;

namespace {

void check_against_oracle(const Graph& g) {
  const CharPoly p = char_poly(g);
  const std::vector<long long> expected = oracle::cofactor_char_poly(g);
  REQUIRE(p.coeffs.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(p.coeffs[i] == BigInt(expected[i]));
}

}  // namespace

TEST_CASE("reference polynomials") {
  // x^4 - 3x^2 + 1 and x^5 - 5x^3 + 5x - 2, frozen from the cofactor oracle.
  CharPoly p4 = char_poly(testg::path(4));
  CHECK(p4.coeffs == std::vector<BigInt>{1, 0, -3, 0, 1});
  CharPoly c5 = char_poly(testg::cycle(5));
  CHECK(c5.coeffs == std::vector<BigInt>{-2, 5, 0, -5, 0, 1});
  CharPoly k1 = char_poly(Graph(1));
  CHECK(k1.coeffs == std::vector<BigInt>{0, 1});
}

TEST_CASE("matches cofactor expansion for all graphs up to 5 vertices") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : oracle::all_graphs(n)) check_against_oracle(g);
}

TEST_CASE("matches cofactor expansion on random 6-vertex graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial)
    check_against_oracle(oracle::random_graph(6, rng));
}

TEST_CASE("structural coefficients") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(n, rng);
    const CharPoly p = char_poly(g);
    CHECK(p.coeffs[n] == 1);
    CHECK(p.coeffs[n - 1] == 0);
    CHECK(p.coeffs[n - 2] == -BigInt(g.edge_count()));
    Graph h = apply_permutation(g, oracle::random_permutation(n, rng));
    CHECK(char_poly(h) == p);
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(char_poly(testg::path(4))) == "x^4-3x^2+1");
  CHECK(to_string(char_poly(testg::cycle(5))) == "x^5-5x^3+5x-2");
  CHECK(to_string(char_poly(Graph(1))) == "x");
  CHECK(to_string(char_poly(Graph(2))) == "x^2");
}
