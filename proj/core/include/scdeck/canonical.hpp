#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "scdeck/graph.hpp"

namespace scdeck {

/// Ordered list of disjoint vertex cells covering {0..n-1}. Cell order is
/// significant: it fixes the split order during refinement and, once the
/// partition is discrete, the canonical labeling.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;
};

OrderedPartition unit_partition(int n);

/// Coarsest equitable refinement of p: in the result every vertex of a cell
/// has the same number of neighbors in every cell. Cells split in place by
/// neighbor-count vector, ascending; iterated to the fixed point, so the
/// operation is idempotent and relabeling-equivariant.
OrderedPartition refine(const Graph& g, const OrderedPartition& p);

/// Label-invariant key: equal for two graphs exactly when they are
/// isomorphic. bits is the upper-triangle bit string (column-major, packed
/// MSB-first) of the canonically relabeled graph; the total order is
/// lexicographic on (n, bits).
struct CanonicalCertificate {
  std::uint8_t n = 0;
  std::string bits;

  auto operator<=>(const CanonicalCertificate&) const = default;
};

struct CertificateHash {
  std::size_t operator()(const CanonicalCertificate& c) const {
    // FNV-1a, stable across platforms.
    std::uint64_t h = 1469598103934665603ull;
    h = (h ^ c.n) * 1099511628211ull;
    for (unsigned char b : c.bits) h = (h ^ b) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Canonical form by equitable refinement with backtracking: refine, and if
/// the partition is not discrete, individualize each vertex of the first
/// smallest non-singleton cell in turn, keeping the lexicographically
/// smallest certificate over all leaves. Branches whose leading-singleton
/// bit prefix already exceeds the best certificate are cut.
CanonicalCertificate canonical_form(const Graph& g);

/// Rebuilds the canonically labeled graph a certificate encodes.
Graph certificate_graph(const CanonicalCertificate& cert);

/// Certificate equality with cheap rejects on order, edge count and degree
/// sequence first.
bool are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace scdeck
