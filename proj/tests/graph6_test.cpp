#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "scdeck/graph6.hpp"
#include "test_graphs.hpp"

using namespace scdeck;

// Hand-derived reference encodings: "Ch" is (0,1),(1,2),(2,3) on 4 vertices
// (size byte 'C' = 67, data byte 'h' = 104 -> 101001 over the pair order
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3)); "Dhc" is the 5-cycle 0-1-2-3-4-0.

TEST_CASE("decode reference strings") {
  CHECK(g6_decode("Ch") == testg::path(4));
  CHECK(g6_decode("C?") == testg::empty(4));
  CHECK(g6_decode("Dhc") == testg::cycle(5));
  CHECK(g6_decode("@") == Graph(1));
}

TEST_CASE("encode reference strings") {
  CHECK(g6_encode(testg::path(4)) == "Ch");
  CHECK(g6_encode(testg::empty(4)) == "C?");
  CHECK(g6_encode(testg::cycle(5)) == "Dhc");
  CHECK(g6_encode(Graph(1)) == "@");
}

TEST_CASE("decode errors name the offending byte") {
  CHECK_THROWS_AS(g6_decode(""), G6DecodeError);
  CHECK_THROWS_AS(g6_decode("C"), G6DecodeError);      // missing data bytes
  CHECK_THROWS_AS(g6_decode("Chh"), G6DecodeError);    // trailing bytes
  CHECK_THROWS_AS(g6_decode("C\x20"), G6DecodeError);  // char below 63
  CHECK_THROWS_AS(g6_decode(std::string("C\x7f")), G6DecodeError);

  // 'A' (n=2) with data byte encoding 010000: bit 1 is padding and nonzero.
  CHECK_THROWS_AS(g6_decode("AO"), G6DecodeError);
  try {
    g6_decode("AO");
  } catch (const G6DecodeError& e) {
    CHECK(e.byte_offset() == 1);
  }

  // Extended size form for n=65 must be rejected.
  std::string too_big = "~";
  too_big += static_cast<char>(63);
  too_big += static_cast<char>(64);
  too_big += static_cast<char>(63 + 1);
  CHECK_THROWS_AS(g6_decode(too_big), G6DecodeError);
}

TEST_CASE("extended size form for 63 and 64 vertices") {
  for (int n : {63, 64}) {
    std::mt19937_64 rng(n);
    Graph g = oracle::random_graph(n, rng);
    const std::string enc = g6_encode(g);
    CHECK(enc[0] == '~');
    CHECK(enc.size() == 4 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    CHECK(g6_decode(enc) == g);
  }
  // Short form is always used through n = 62.
  CHECK(g6_encode(Graph(62))[0] == static_cast<char>(62 + 63));
}

TEST_CASE("round-trip on 1000 random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 17);
    Graph g = oracle::random_graph(n, rng);
    CHECK(g6_decode(g6_encode(g)) == g);
  }
}

TEST_CASE("file io with optional header") {
  std::istringstream with_header(">>graph6<<\nCh\nDhc\n");
  auto records = read_g6_records(with_header);
  REQUIRE(records.size() == 2);
  CHECK(records[0].graph == testg::path(4));
  CHECK(records[0].line_number == 2);
  CHECK(records[1].line_number == 3);

  std::istringstream no_header("Ch\n");
  CHECK(read_g6_records(no_header).size() == 1);

  std::istringstream blank("Ch\n\nDhc\n");
  CHECK_THROWS_AS(read_g6_records(blank), G6FileError);

  std::istringstream bad("Ch\nC\n");
  try {
    read_g6_records(bad);
    FAIL("expected G6FileError");
  } catch (const G6FileError& e) {
    CHECK(e.line_number() == 2);
  }
}
