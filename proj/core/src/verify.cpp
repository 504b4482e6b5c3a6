#include "scdeck/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include <json.hpp>

#include "parallel.hpp"
#include "scdeck/graph6.hpp"

namespace scdeck {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::string to_string(VerifyMode mode) {
  return mode == VerifyMode::pairwise ? "pairwise" : "certificate";
}

VerificationReport verify_all(std::span<const Graph> graphs, VerifyMode mode,
                              int workers) {
  const auto t0 = std::chrono::steady_clock::now();
  if (workers < 1) workers = 1;

  VerificationReport report;
  report.mode = mode;
  report.graph_count = graphs.size();
  if (graphs.empty()) return report;

  report.n = graphs[0].order();
  for (std::size_t i = 1; i < graphs.size(); ++i)
    if (graphs[i].order() != report.n)
      throw std::invalid_argument("verify_all: mixed vertex counts at input position " +
                                  std::to_string(i));

  // Duplicate rejection: the listing contract is one graph per isomorphism
  // class.
  std::vector<CanonicalCertificate> certs(graphs.size());
  detail::parallel_for(graphs.size(), workers,
                       [&](std::size_t i) { certs[i] = canonical_form(graphs[i]); });
  {
    std::vector<std::size_t> order(graphs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return certs[a] != certs[b] ? certs[a] < certs[b] : a < b;
    });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (certs[order[i - 1]] == certs[order[i]])
        throw DuplicateInputError(order[i - 1], order[i]);
  }

  std::vector<ClassKey> keys(graphs.size());
  detail::parallel_for(graphs.size(), workers,
                       [&](std::size_t i) { keys[i] = level1_key(graphs[i]); });

  std::map<ClassKey, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < graphs.size(); ++i) classes[keys[i]].push_back(i);

  // Decks and deck signatures, but only where they will be used: pairwise
  // mode needs decks inside classes of size >= 2, certificate mode signs
  // every graph.
  std::vector<std::size_t> need_deck;
  if (mode == VerifyMode::certificate) {
    need_deck.resize(graphs.size());
    std::iota(need_deck.begin(), need_deck.end(), 0);
  } else {
    for (const auto& [key, members] : classes)
      if (members.size() >= 2)
        need_deck.insert(need_deck.end(), members.begin(), members.end());
  }
  std::vector<Deck> decks(graphs.size(), Deck{});
  std::vector<DeckCertificate> signatures(
      mode == VerifyMode::certificate ? graphs.size() : 0);
  detail::parallel_for(need_deck.size(), workers, [&](std::size_t t) {
    const std::size_t i = need_deck[t];
    decks[i] = build_deck(graphs[i]);
    if (mode == VerifyMode::certificate) {
      DeckCertificate sig;
      for (const DegreeBucket& bucket : decks[i].buckets)
        for (const Card& card : bucket.cards)
          sig.certs.push_back(canonical_form(card.graph));
      std::sort(sig.certs.begin(), sig.certs.end());
      signatures[i] = std::move(sig);
    }
  });

  // One stats row per class, in key order.
  std::map<ClassKey, std::size_t> stats_index;
  for (const auto& [key, members] : classes) {
    ClassStats stats;
    stats.key_digest = class_key_digest(key);
    stats.size = members.size();
    stats.naive_pairs = choose2(members.size());
    stats_index.emplace(key, report.classes.size());
    report.classes.push_back(std::move(stats));
  }

  // Candidate deck pairs. pairwise mode: all same-class pairs. certificate
  // mode: signature collisions over the whole listing, re-confirmed pairwise.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (mode == VerifyMode::pairwise) {
    for (const auto& [key, members] : classes)
      for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b)
          pairs.emplace_back(members[a], members[b]);
  } else {
    std::map<DeckCertificate, std::vector<std::size_t>> by_signature;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      by_signature[signatures[i]].push_back(i);
    for (const auto& [sig, group] : by_signature)
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b)
          pairs.emplace_back(group[a], group[b]);
  }

  std::vector<std::array<std::string, 2>> collisions;
  for (auto [i, j] : pairs) {
    const DeckComparison cmp = decks_isomorphic_pairwise(decks[i], decks[j]);
    ClassStats& stats = report.classes[stats_index.at(keys[i])];
    ++stats.pairs_compared;
    stats.iso_checks += cmp.iso_checks;
    if (cmp.isomorphic) {
      std::string a = g6_encode(graphs[i]);
      std::string b = g6_encode(graphs[j]);
      if (b < a) std::swap(a, b);
      collisions.push_back({std::move(a), std::move(b)});
    }
  }

  std::sort(collisions.begin(), collisions.end());
  report.collisions = std::move(collisions);

  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["graph_count"] = report.graph_count;
  j["mode"] = to_string(report.mode);
  j["classes"] = nlohmann::ordered_json::array();
  for (const ClassStats& c : report.classes) {
    j["classes"].push_back({{"key", c.key_digest},
                            {"size", c.size},
                            {"naive_pairs", c.naive_pairs},
                            {"pairs_compared", c.pairs_compared},
                            {"iso_checks", c.iso_checks}});
  }
  j["collisions"] = nlohmann::ordered_json::array();
  for (const auto& pair : report.collisions)
    j["collisions"].push_back({pair[0], pair[1]});
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2) + "\n";
}

}  // namespace scdeck
