#include "scdeck/graph.hpp"

#include <algorithm>

namespace scdeck {

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("delete_vertex: graph has one vertex");
  if (v < 0 || v >= n) throw std::out_of_range("delete_vertex: vertex out of range");
  Graph h(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    for (int w = u + 1; w < n; ++w) {
      if (w == v || !g.has_edge(u, w)) continue;
      const int uu = u < v ? u : u - 1;
      const int ww = w < v ? w : w - 1;
      h.add_edge(uu, ww);
    }
  }
  return h;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence ds;
  ds.degrees.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) ds.degrees.push_back(g.degree(v));
  std::sort(ds.degrees.begin(), ds.degrees.end(), std::greater<int>());
  return ds;
}

Diameter diameter(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  int max_dist = 0;
  for (int s = 0; s < n; ++s) {
    // Bit-parallel BFS: expand the reachable set one layer at a time.
    std::uint64_t reached = std::uint64_t{1} << s;
    std::uint64_t frontier = reached;
    int dist = 0;
    while (reached != all) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f;) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.row(v);
      }
      next &= ~reached;
      if (next == 0) return Diameter::infinite();
      reached |= next;
      frontier = next;
      ++dist;
    }
    max_dist = std::max(max_dist, dist);
  }
  return Diameter::finite(max_dist);
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("apply_permutation: size mismatch");
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace scdeck
