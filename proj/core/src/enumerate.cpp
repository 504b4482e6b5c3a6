#include "scdeck/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace scdeck {

namespace {

void descend_parts(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<CycleType>& out, bool add_fixed_point) {
  if (remaining == 0) {
    CycleType ct{acc};
    if (add_fixed_point) ct.parts.push_back(1);
    out.push_back(std::move(ct));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 4; part -= 4) {
    acc.push_back(part);
    descend_parts(remaining - part, part, acc, out, add_fixed_point);
    acc.pop_back();
  }
}

std::pair<int, int> norm_pair(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

using CertSet = std::unordered_set<CanonicalCertificate, CertificateHash>;

// The two alternating assignments of one orbit differ by toggling every pair.
void toggle_orbit(Graph& g, const PairOrbit& orbit) {
  for (auto [u, v] : orbit.pairs) g.toggle_edge(u, v);
}

// Graph for assignment word `phases`: orbit b takes its even-position pairs
// as edges when bit b is clear, odd-position pairs when set.
Graph assignment_graph(int n, const std::vector<PairOrbit>& orbits,
                       std::uint64_t phases) {
  Graph g(n);
  for (std::size_t b = 0; b < orbits.size(); ++b) {
    const std::size_t start = (phases >> b) & 1 ? 1 : 0;
    const auto& pairs = orbits[b].pairs;
    for (std::size_t p = start; p < pairs.size(); p += 2)
      g.add_edge(pairs[p].first, pairs[p].second);
  }
  return g;
}

// Canonicalizes every assignment in [begin, end) of the orbit alternation
// space, walking Gray-code so consecutive assignments differ in one orbit.
void scan_range(int n, const std::vector<PairOrbit>& orbits,
                std::uint64_t begin, std::uint64_t end, CertSet& certs) {
  Graph g = assignment_graph(n, orbits, begin ^ (begin >> 1));
  certs.insert(canonical_form(g));
  for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
    toggle_orbit(g, orbits[static_cast<std::size_t>(std::countr_zero(idx))]);
    certs.insert(canonical_form(g));
  }
}

}  // namespace

std::vector<CycleType> antimorphism_cycle_types(int n) {
  if (n < 1) throw std::invalid_argument("antimorphism_cycle_types: n must be >= 1");
  std::vector<CycleType> out;
  const int mod = n % 4;
  if (mod == 2 || mod == 3) return out;
  const int cycle_sum = mod == 1 ? n - 1 : n;
  std::vector<int> acc;
  descend_parts(cycle_sum, cycle_sum, acc, out, mod == 1);
  return out;
}

Permutation representative_permutation(const CycleType& ct) {
  Permutation sigma;
  int base = 0;
  for (int part : ct.parts) {
    for (int i = 0; i < part; ++i)
      sigma.push_back(base + (i + 1) % part);
    base += part;
  }
  return sigma;
}

std::vector<PairOrbit> pair_orbits(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  std::vector<PairOrbit> orbits;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (seen[u][v]) continue;
      PairOrbit orbit;
      auto p = std::make_pair(u, v);
      do {
        seen[p.first][p.second] = true;
        orbit.pairs.push_back(p);
        p = norm_pair(sigma[p.first], sigma[p.second]);
      } while (p != std::make_pair(u, v));
      if (orbit.pairs.size() % 2 != 0)
        throw std::logic_error("pair_orbits: odd orbit, invalid cycle type");
      orbits.push_back(std::move(orbit));
    }
  }
  return orbits;
}

void graphs_for_permutation(const Permutation& sigma,
                            const std::function<void(const Graph&)>& yield) {
  const int n = static_cast<int>(sigma.size());
  const auto orbits = pair_orbits(sigma);
  if (orbits.size() > 62)
    throw std::invalid_argument("graphs_for_permutation: orbit space too large");
  Graph g = assignment_graph(n, orbits, 0);
  yield(g);
  const std::uint64_t total = std::uint64_t{1} << orbits.size();
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    toggle_orbit(g, orbits[static_cast<std::size_t>(std::countr_zero(idx))]);
    yield(g);
  }
}

std::vector<Graph> enumerate_sc(int n, int workers) {
  if (n < 1) throw std::invalid_argument("enumerate_sc: n must be >= 1");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("enumerate_sc: n above 64 unsupported");
  std::vector<Graph> result;
  if (n % 4 == 2 || n % 4 == 3) return result;
  if (workers < 1) workers = 1;

  // Work units: contiguous assignment ranges per cycle type. The split is
  // fixed by n alone, so the certificate set (and the sorted output) does not
  // depend on the worker count.
  struct Task {
    const std::vector<PairOrbit>* orbits;
    std::uint64_t begin, end;
  };
  std::vector<std::vector<PairOrbit>> orbit_sets;
  for (const CycleType& ct : antimorphism_cycle_types(n))
    orbit_sets.push_back(pair_orbits(representative_permutation(ct)));

  constexpr std::uint64_t kChunk = 1u << 14;
  std::vector<Task> tasks;
  for (const auto& orbits : orbit_sets) {
    if (orbits.size() > 62)
      throw std::invalid_argument("enumerate_sc: n too large to enumerate");
    const std::uint64_t total = std::uint64_t{1} << orbits.size();
    for (std::uint64_t b = 0; b < total; b += kChunk)
      tasks.push_back({&orbits, b, std::min(total, b + kChunk)});
  }

  CertSet certs;
  if (workers == 1 || tasks.size() <= 1) {
    for (const Task& t : tasks) scan_range(n, *t.orbits, t.begin, t.end, certs);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    auto run = [&] {
      CertSet local;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        scan_range(n, *tasks[i].orbits, tasks[i].begin, tasks[i].end, local);
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      certs.merge(local);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  std::vector<CanonicalCertificate> sorted(certs.begin(), certs.end());
  std::sort(sorted.begin(), sorted.end());
  result.reserve(sorted.size());
  for (const auto& cert : sorted) result.push_back(certificate_graph(cert));
  return result;
}

bool is_self_complementary(const Graph& g) {
  return canonical_form(g) == canonical_form(complement(g));
}

}  // namespace scdeck
