#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "scdeck/canonical.hpp"
#include "scdeck/graph.hpp"

namespace scdeck {

/// Cycle type of a complementing permutation: parts descending, every part a
/// multiple of 4, plus exactly one part 1 when n == 1 (mod 4). No valid type
/// exists for n == 2, 3 (mod 4), n > 1.
struct CycleType {
  std::vector<int> parts;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Permutation as an image table: v maps to perm[v].
using Permutation = std::vector<int>;

/// All valid cycle types for n, lexicographically descending
/// (e.g. n=12: [12], [8,4], [4,4,4]).
std::vector<CycleType> antimorphism_cycle_types(int n);

/// The block-form representative: cycles occupy consecutive vertex ranges in
/// part order, so [4,1] becomes (0 1 2 3)(4). One representative per type
/// suffices, since conjugate permutations generate relabelings of the same
/// graph family.
Permutation representative_permutation(const CycleType& ct);

/// Orbit of sigma acting on unordered vertex pairs, listed in trace order
/// starting from the orbit's smallest pair.
struct PairOrbit {
  std::vector<std::pair<int, int>> pairs;
};

/// Partition of all n(n-1)/2 pairs into sigma-orbits, ordered by smallest
/// pair. Every orbit of a valid complementing permutation has even length;
/// an odd orbit raises logic_error.
std::vector<PairOrbit> pair_orbits(const Permutation& sigma);

/// Streams the 2^#orbits labeled graphs with sigma(G) = complement(G): each
/// orbit independently takes one of its two alternating edge/non-edge
/// assignments. Gray-code order, one orbit flipped per step.
void graphs_for_permutation(const Permutation& sigma,
                            const std::function<void(const Graph&)>& yield);

/// All self-complementary graphs on n vertices, one canonically labeled
/// representative per isomorphism class, sorted by certificate. Empty for
/// n == 2, 3 (mod 4), n > 1. Deterministic for any worker count.
std::vector<Graph> enumerate_sc(int n, int workers = 1);

bool is_self_complementary(const Graph& g);

}  // namespace scdeck
