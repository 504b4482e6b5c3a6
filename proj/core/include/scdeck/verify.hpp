#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scdeck/deck.hpp"
#include "scdeck/graph.hpp"

namespace scdeck {

enum class VerifyMode { pairwise, certificate };

std::string to_string(VerifyMode mode);

/// The input listing must be duplicate-free up to isomorphism; a repeated
/// class is an input-contract violation, not a counterexample.
class DuplicateInputError : public std::runtime_error {
 public:
  DuplicateInputError(std::size_t first, std::size_t second)
      : std::runtime_error("duplicate isomorphic graphs at input positions " +
                           std::to_string(first) + " and " + std::to_string(second)),
        first_(first),
        second_(second) {}

  std::size_t first_index() const { return first_; }
  std::size_t second_index() const { return second_; }

 private:
  std::size_t first_, second_;
};

struct ClassStats {
  std::string key_digest;
  std::uint64_t size = 0;
  std::uint64_t naive_pairs = 0;     // C(size, 2)
  std::uint64_t pairs_compared = 0;  // deck pairs actually run
  std::uint64_t iso_checks = 0;      // card-pair isomorphism tests
};

/// Outcome of a weak-reconstruction run over one listing. An empty collision
/// list means every graph in the listing is determined by its deck within the
/// listing. Everything except wall_time_ms is deterministic for a given
/// input, independent of mode internals and worker count.
struct VerificationReport {
  int n = 0;
  std::uint64_t graph_count = 0;
  VerifyMode mode = VerifyMode::certificate;
  std::vector<ClassStats> classes;                    // level-1 key order
  std::vector<std::array<std::string, 2>> collisions; // graph6 pairs, sorted
  double wall_time_ms = 0.0;
};

/// Checks every same-class pair of decks. pairwise mode compares decks
/// directly inside each level-1 class; certificate mode hashes deck
/// signatures and re-confirms any collision pairwise. Throws
/// std::invalid_argument on mixed vertex counts and DuplicateInputError on
/// isomorphic duplicates.
VerificationReport verify_all(std::span<const Graph> graphs, VerifyMode mode,
                              int workers = 1);

/// Stable JSON rendering of a report; field order and formatting are part of
/// the schema (see README).
std::string report_to_json(const VerificationReport& report);

}  // namespace scdeck
