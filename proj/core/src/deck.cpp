#include "scdeck/deck.hpp"

#include <algorithm>
#include <stdexcept>

namespace scdeck {

Deck build_deck(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("build_deck: need at least 2 vertices");
  std::vector<Card> cards;
  cards.reserve(n);
  for (int v = 0; v < n; ++v) {
    Graph sub = delete_vertex(g, v);
    DegreeSequence ds = degree_sequence(sub);
    cards.push_back({std::move(sub), std::move(ds)});
  }
  std::stable_sort(cards.begin(), cards.end(),
                   [](const Card& a, const Card& b) { return b.ds < a.ds; });

  Deck deck;
  deck.owner_n = n;
  for (auto& card : cards) {
    if (deck.buckets.empty() || deck.buckets.back().ds != card.ds) {
      deck.buckets.emplace_back();
      deck.buckets.back().ds = card.ds;
    }
    deck.buckets.back().cards.push_back(std::move(card));
  }
  return deck;
}

ClassKey level1_key(const Graph& g) {
  return {degree_sequence(g), char_poly(g), diameter(g)};
}

std::string class_key_digest(const ClassKey& key) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char b : bytes) h = (h ^ b) * 1099511628211ull;
  };
  auto mix_int = [&](long long v) {
    const std::string s = std::to_string(v) + ';';
    mix(s);
  };
  mix_int(static_cast<long long>(key.ds.degrees.size()));
  for (int d : key.ds.degrees) mix_int(d);
  mix("|");
  for (const BigInt& c : key.cp.coeffs) mix(c.str() + ';');
  mix("|");
  mix(key.diam.is_infinite() ? "inf" : std::to_string(key.diam.value()));

  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::map<ClassKey, std::vector<Graph>> partition_classes(std::span<const Graph> graphs) {
  std::map<ClassKey, std::vector<Graph>> classes;
  for (const Graph& g : graphs) classes[level1_key(g)].push_back(g);
  return classes;
}

DeckCertificate deck_signature(const Graph& g) {
  if (g.order() < 2)
    throw std::invalid_argument("deck_signature: need at least 2 vertices");
  DeckCertificate sig;
  sig.certs.reserve(g.order());
  for (int v = 0; v < g.order(); ++v)
    sig.certs.push_back(canonical_form(delete_vertex(g, v)));
  std::sort(sig.certs.begin(), sig.certs.end());
  return sig;
}

DeckComparison decks_isomorphic_pairwise(const Deck& d1, const Deck& d2) {
  if (d1.owner_n != d2.owner_n)
    throw std::invalid_argument("decks_isomorphic_pairwise: owner order differs");

  // Level-2 prune: bucket degree sequences and counts must agree exactly.
  if (d1.buckets.size() != d2.buckets.size()) return {false, 0};
  for (std::size_t i = 0; i < d1.buckets.size(); ++i) {
    if (d1.buckets[i].ds != d2.buckets[i].ds ||
        d1.buckets[i].count() != d2.buckets[i].count())
      return {false, 0};
  }

  std::uint64_t checks = 0;
  for (std::size_t i = 0; i < d1.buckets.size(); ++i) {
    const auto& cards1 = d1.buckets[i].cards;
    const auto& cards2 = d2.buckets[i].cards;
    std::vector<CanonicalCertificate> c1, c2;
    c1.reserve(cards1.size());
    c2.reserve(cards2.size());
    for (const Card& c : cards1) c1.push_back(canonical_form(c.graph));
    for (const Card& c : cards2) c2.push_back(canonical_form(c.graph));

    // Greedy matching: each deck-1 card scans the still-unmatched deck-2
    // cards; a card without a partner settles the verdict.
    std::vector<bool> matched(c2.size(), false);
    for (std::size_t a = 0; a < c1.size(); ++a) {
      bool found = false;
      for (std::size_t b = 0; b < c2.size(); ++b) {
        if (matched[b]) continue;
        ++checks;
        if (c1[a] == c2[b]) {
          matched[b] = true;
          found = true;
          break;
        }
      }
      if (!found) return {false, checks};
    }
  }
  return {true, checks};
}

}  // namespace scdeck
