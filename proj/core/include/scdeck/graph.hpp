#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace scdeck {

/// Labeled simple graph on up to 64 vertices, one 64-bit adjacency row per
/// vertex. Immutable by convention once built: every operation in this
/// library returns a new value instead of mutating in place, so graphs are
/// safe to share across threads.
///
/// Invariants kept by the mutators: the adjacency matrix is symmetric with a
/// zero diagonal, and bits at column positions >= order() are zero.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) { set_edge(u, v, true); }

  void set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops not allowed");
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    if (present) {
      rows_[u] |= bv;
      rows_[v] |= bu;
    } else {
      rows_[u] &= ~bv;
      rows_[v] &= ~bu;
    }
  }

  void toggle_edge(int u, int v) {
    rows_[u] ^= std::uint64_t{1} << v;
    rows_[v] ^= std::uint64_t{1} << u;
  }

  /// Neighborhood of v as a bitmask over vertex ids.
  std::uint64_t row(int v) const { return rows_[v]; }

  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Vertex degrees sorted non-increasing. Sum is even, entries in [0, n-1].
struct DegreeSequence {
  std::vector<int> degrees;

  auto operator<=>(const DegreeSequence&) const = default;
};

/// Graph diameter; disconnected graphs get the distinguished infinite value,
/// which compares greater than every finite diameter.
class Diameter {
 public:
  Diameter() : raw_(0) {}

  static Diameter finite(int value) { return Diameter(value); }
  static Diameter infinite() { return Diameter(kInfiniteRaw); }

  bool is_infinite() const { return raw_ == kInfiniteRaw; }

  int value() const {
    if (is_infinite()) throw std::logic_error("Diameter: infinite has no value");
    return raw_;
  }

  auto operator<=>(const Diameter&) const = default;

 private:
  static constexpr int kInfiniteRaw = std::numeric_limits<int>::max();
  explicit Diameter(int raw) : raw_(raw) {}
  int raw_;
};

Graph complement(const Graph& g);

/// Removes vertex v; the remaining vertices are renumbered preserving their
/// relative order. Requires order >= 2.
Graph delete_vertex(const Graph& g, int v);

DegreeSequence degree_sequence(const Graph& g);

Diameter diameter(const Graph& g);

/// Applies a relabeling: vertex v of g becomes perm[v] in the result.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace scdeck
