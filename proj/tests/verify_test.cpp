#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "scdeck/enumerate.hpp"
#include "scdeck/verify.hpp"
#include "test_graphs.hpp"

using namespace scdeck;

namespace {

std::string normalized_json(VerificationReport report) {
  report.wall_time_ms = 0.0;
  return report_to_json(report);
}

}  // namespace

TEST_CASE("verifies the 8-vertex listing in both modes") {
  const auto graphs = enumerate_sc(8);
  for (VerifyMode mode : {VerifyMode::certificate, VerifyMode::pairwise}) {
    const VerificationReport report = verify_all(graphs, mode);
    CHECK(report.n == 8);
    CHECK(report.graph_count == 10);
    CHECK(report.collisions.empty());
    std::uint64_t total = 0;
    for (const ClassStats& c : report.classes) {
      total += c.size;
      CHECK(c.naive_pairs == c.size * (c.size - 1) / 2);
      CHECK(c.pairs_compared <= c.naive_pairs);
    }
    CHECK(total == 10);
  }
}

TEST_CASE("modes agree on collision sets and class memberships up to 9 vertices") {
  for (int n : {4, 5, 8, 9}) {
    const auto graphs = enumerate_sc(n);
    const VerificationReport pw = verify_all(graphs, VerifyMode::pairwise);
    const VerificationReport ct = verify_all(graphs, VerifyMode::certificate);
    CHECK(pw.collisions == ct.collisions);
    REQUIRE(pw.classes.size() == ct.classes.size());
    for (std::size_t i = 0; i < pw.classes.size(); ++i) {
      CHECK(pw.classes[i].key_digest == ct.classes[i].key_digest);
      CHECK(pw.classes[i].size == ct.classes[i].size);
    }
  }
}

TEST_CASE("level-1 pruning never separates deck-isomorphic graphs") {
  // Exhaustive cross-class check: graphs in different classes must have
  // different deck signatures.
  for (int n : {8, 9}) {
    const auto graphs = enumerate_sc(n);
    std::vector<ClassKey> keys;
    std::vector<DeckCertificate> sigs;
    for (const Graph& g : graphs) {
      keys.push_back(level1_key(g));
      sigs.push_back(deck_signature(g));
    }
    for (std::size_t a = 0; a < graphs.size(); ++a)
      for (std::size_t b = a + 1; b < graphs.size(); ++b)
        if (keys[a] != keys[b]) CHECK(sigs[a] != sigs[b]);
  }
}

TEST_CASE("duplicate inputs are rejected with the offending pair") {
  std::mt19937_64 rng(1);
  const auto graphs = enumerate_sc(8);
  std::vector<Graph> listing{graphs[3], graphs[7],
                             apply_permutation(graphs[3], oracle::random_permutation(8, rng))};
  try {
    verify_all(listing, VerifyMode::certificate);
    FAIL("expected DuplicateInputError");
  } catch (const DuplicateInputError& e) {
    CHECK(e.first_index() == 0);
    CHECK(e.second_index() == 2);
  }
}

TEST_CASE("mixed vertex counts are rejected") {
  const std::vector<Graph> listing{testg::path(4), testg::cycle(5)};
  CHECK_THROWS_AS(verify_all(listing, VerifyMode::certificate), std::invalid_argument);
}

TEST_CASE("certificate mode finds the classic 2-vertex deck collision") {
  // K2 and its complement share the deck {K1, K1}: the textbook exception
  // that keeps 2-vertex graphs outside reconstruction statements. Neither
  // graph is self-complementary, so this listing is outside the verifier's
  // input contract, but it exercises the collision path end to end.
  Graph k2(2);
  k2.add_edge(0, 1);
  const std::vector<Graph> listing{k2, Graph(2)};

  const VerificationReport ct = verify_all(listing, VerifyMode::certificate);
  REQUIRE(ct.collisions.size() == 1);
  CHECK(ct.collisions[0] == std::array<std::string, 2>{"A?", "A_"});

  // Pairwise mode only compares within level-1 classes, whose premise (the
  // key invariants are deck-determined) holds for SC inputs; K2 and 2K1
  // land in different classes, so this pair is not examined there.
  const VerificationReport pw = verify_all(listing, VerifyMode::pairwise);
  CHECK(pw.collisions.empty());
}

TEST_CASE("empty listing verifies trivially") {
  const VerificationReport report = verify_all({}, VerifyMode::pairwise);
  CHECK(report.graph_count == 0);
  CHECK(report.collisions.empty());
  CHECK(report.classes.empty());
}

TEST_CASE("relabeling every input leaves the report unchanged") {
  std::mt19937_64 rng(2);
  const auto graphs = enumerate_sc(9);
  std::vector<Graph> shuffled;
  for (const Graph& g : graphs)
    shuffled.push_back(apply_permutation(g, oracle::random_permutation(9, rng)));
  const VerificationReport a = verify_all(graphs, VerifyMode::pairwise);
  const VerificationReport b = verify_all(shuffled, VerifyMode::pairwise);
  CHECK(a.collisions == b.collisions);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].key_digest == b.classes[i].key_digest);
    CHECK(a.classes[i].size == b.classes[i].size);
  }
}

TEST_CASE("reports are byte-identical across worker counts") {
  const auto graphs = enumerate_sc(9);
  for (VerifyMode mode : {VerifyMode::certificate, VerifyMode::pairwise}) {
    const std::string one = normalized_json(verify_all(graphs, mode, 1));
    const std::string four = normalized_json(verify_all(graphs, mode, 4));
    CHECK(one == four);
  }
}

TEST_CASE("report JSON carries the schema fields") {
  const auto graphs = enumerate_sc(5);
  const std::string json = report_to_json(verify_all(graphs, VerifyMode::certificate));
  for (const char* field : {"\"n\"", "\"graph_count\"", "\"mode\"", "\"classes\"",
                            "\"collisions\"", "\"wall_time_ms\"", "\"key\"", "\"size\"",
                            "\"naive_pairs\"", "\"pairs_compared\"", "\"iso_checks\""})
    CHECK(json.find(field) != std::string::npos);
}
