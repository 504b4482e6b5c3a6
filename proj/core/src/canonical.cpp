#include "scdeck/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace scdeck {

namespace {

// Partition as ordered cell bitmasks; the search never needs more cells than
// vertices.
struct Cells {
  int n = 0;
  int count = 0;
  std::array<std::uint64_t, Graph::kMaxVertices> mask{};
};

// One simultaneous splitting round: every cell of size >= 2 is partitioned by
// its vertices' neighbor-count vectors against the round-start cells, the
// fragments ordered by count vector ascending. Returns true if any cell
// split.
bool refine_round(const Graph& g, Cells& c) {
  const int ncells = c.count;
  std::array<std::uint64_t, Graph::kMaxVertices> old = c.mask;

  Cells out;
  out.n = c.n;
  bool changed = false;

  std::array<std::array<std::uint8_t, Graph::kMaxVertices>, Graph::kMaxVertices> key;
  std::array<int, Graph::kMaxVertices> verts;

  for (int ci = 0; ci < ncells; ++ci) {
    const std::uint64_t cell = old[ci];
    if (std::popcount(cell) == 1) {
      out.mask[out.count++] = cell;
      continue;
    }
    int nv = 0;
    for (std::uint64_t m = cell; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      verts[nv++] = v;
      for (int t = 0; t < ncells; ++t)
        key[v][t] = static_cast<std::uint8_t>(std::popcount(g.row(v) & old[t]));
    }
    std::sort(verts.begin(), verts.begin() + nv, [&](int a, int b) {
      const int cmp = std::memcmp(key[a].data(), key[b].data(),
                                  static_cast<std::size_t>(ncells));
      return cmp < 0 || (cmp == 0 && a < b);
    });
    int start = 0;
    for (int i = 1; i <= nv; ++i) {
      if (i == nv || std::memcmp(key[verts[i]].data(), key[verts[start]].data(),
                                 static_cast<std::size_t>(ncells)) != 0) {
        std::uint64_t sub = 0;
        for (int j = start; j < i; ++j) sub |= std::uint64_t{1} << verts[j];
        out.mask[out.count++] = sub;
        start = i;
      }
    }
    if (out.mask[out.count - 1] != cell) changed = true;
  }
  if (changed) c = out;
  return changed;
}

void refine_cells(const Graph& g, Cells& c) {
  while (refine_round(g, c)) {
  }
}

struct Searcher {
  const Graph& g;
  int n;
  std::size_t nbits;
  std::size_t nbytes;
  bool have_best = false;
  std::array<std::uint8_t, 252> best{};  // 64*63/2 bits packed

  explicit Searcher(const Graph& graph)
      : g(graph),
        n(graph.order()),
        nbits(static_cast<std::size_t>(n) * (n - 1) / 2),
        nbytes((nbits + 7) / 8) {}

  // Packs has_edge(lab[i], lab[j]) over pairs (i,j), column-major, into out;
  // returns the number of bits written. npos limits to pairs with j < npos.
  std::size_t pack_bits(const int* lab, int npos, std::uint8_t* out) const {
    std::size_t bit = 0;
    std::memset(out, 0, (static_cast<std::size_t>(npos) * (npos - 1) / 2 + 7) / 8);
    for (int j = 1; j < npos; ++j) {
      const std::uint64_t row = g.row(lab[j]);
      for (int i = 0; i < j; ++i, ++bit)
        if ((row >> lab[i]) & 1)
          out[bit >> 3] |= static_cast<std::uint8_t>(0x80u >> (bit & 7));
    }
    return bit;
  }

  // <0 / 0 / >0 comparison of the first nb bits of a against best.
  int compare_prefix(const std::uint8_t* a, std::size_t nb) const {
    const std::size_t full = nb / 8;
    if (full > 0) {
      const int c = std::memcmp(a, best.data(), full);
      if (c != 0) return c;
    }
    const int rem = static_cast<int>(nb & 7);
    if (rem == 0) return 0;
    const std::uint8_t m = static_cast<std::uint8_t>(0xff00u >> rem);
    const std::uint8_t av = a[full] & m;
    const std::uint8_t bv = best[full] & m;
    return av < bv ? -1 : av > bv ? 1 : 0;
  }

  void search(Cells c) {
    refine_cells(g, c);

    int lab[Graph::kMaxVertices];
    int lead = 0;
    while (lead < c.count && std::popcount(c.mask[lead]) == 1) {
      lab[lead] = std::countr_zero(c.mask[lead]);
      ++lead;
    }

    std::uint8_t prefix[252];
    if (have_best && lead > 1) {
      const std::size_t pb = pack_bits(lab, lead, prefix);
      if (compare_prefix(prefix, pb) > 0) return;
    }

    if (lead == c.count) {
      std::uint8_t full[252];
      pack_bits(lab, n, full);
      if (!have_best || std::memcmp(full, best.data(), nbytes) < 0) {
        std::memcpy(best.data(), full, nbytes);
        have_best = true;
      }
      return;
    }

    // Target: first (in cell order) non-singleton cell of minimum size.
    int target = -1, best_size = n + 1;
    for (int ci = 0; ci < c.count; ++ci) {
      const int size = std::popcount(c.mask[ci]);
      if (size >= 2 && size < best_size) {
        best_size = size;
        target = ci;
      }
    }

    const std::uint64_t cell = c.mask[target];
    for (std::uint64_t m = cell; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      Cells child;
      child.n = c.n;
      child.count = c.count + 1;
      for (int ci = 0; ci < target; ++ci) child.mask[ci] = c.mask[ci];
      child.mask[target] = std::uint64_t{1} << v;
      child.mask[target + 1] = cell & ~(std::uint64_t{1} << v);
      for (int ci = target + 1; ci < c.count; ++ci)
        child.mask[ci + 1] = c.mask[ci];
      search(child);
    }
  }
};

Cells to_cells(int n, const OrderedPartition& p) {
  Cells c;
  c.n = n;
  std::uint64_t seen = 0;
  for (const auto& cell : p.cells) {
    if (cell.empty())
      throw std::invalid_argument("partition: empty cell");
    std::uint64_t m = 0;
    for (int v : cell) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition: vertex out of range");
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((seen | m) & bit)
        throw std::invalid_argument("partition: duplicate vertex");
      m |= bit;
    }
    seen |= m;
    c.mask[c.count++] = m;
  }
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (seen != all)
    throw std::invalid_argument("partition: cells do not cover all vertices");
  return c;
}

OrderedPartition from_cells(const Cells& c) {
  OrderedPartition p;
  p.cells.reserve(c.count);
  for (int ci = 0; ci < c.count; ++ci) {
    std::vector<int> cell;
    for (std::uint64_t m = c.mask[ci]; m;) {
      cell.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    p.cells.push_back(std::move(cell));
  }
  return p;
}

}  // namespace

OrderedPartition unit_partition(int n) {
  OrderedPartition p;
  p.cells.emplace_back();
  for (int v = 0; v < n; ++v) p.cells[0].push_back(v);
  return p;
}

OrderedPartition refine(const Graph& g, const OrderedPartition& p) {
  Cells c = to_cells(g.order(), p);
  refine_cells(g, c);
  return from_cells(c);
}

CanonicalCertificate canonical_form(const Graph& g) {
  Searcher s(g);
  Cells unit;
  unit.n = g.order();
  unit.count = 1;
  unit.mask[0] = g.order() == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << g.order()) - 1;
  s.search(unit);

  CanonicalCertificate cert;
  cert.n = static_cast<std::uint8_t>(g.order());
  cert.bits.assign(reinterpret_cast<const char*>(s.best.data()), s.nbytes);
  return cert;
}

Graph certificate_graph(const CanonicalCertificate& cert) {
  const int n = cert.n;
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const auto byte = static_cast<unsigned char>(cert.bits[bit >> 3]);
      if ((byte >> (7 - (bit & 7))) & 1) g.add_edge(i, j);
    }
  return g;
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  if (degree_sequence(g1) != degree_sequence(g2)) return false;
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace scdeck
