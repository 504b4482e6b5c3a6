#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "scdeck/canonical.hpp"
#include "scdeck/charpoly.hpp"
#include "scdeck/graph.hpp"

namespace scdeck {

/// One vertex-deleted subgraph together with its degree sequence.
struct Card {
  Graph graph;
  DegreeSequence ds;
};

/// All cards of a deck that share one degree sequence, with their count.
struct DegreeBucket {
  DegreeSequence ds;
  std::vector<Card> cards;

  std::size_t count() const { return cards.size(); }
};

/// The deck of a graph: one card per vertex deletion, grouped into degree
/// buckets ordered by degree sequence, descending-lex. Bucket counts sum to
/// the owner's vertex count.
struct Deck {
  int owner_n = 0;
  std::vector<DegreeBucket> buckets;
};

Deck build_deck(const Graph& g);

/// First-level class key: the three invariants that are deck-determined for
/// self-complementary graphs, so graphs with distinct keys can never have
/// isomorphic decks.
struct ClassKey {
  DegreeSequence ds;
  CharPoly cp;
  Diameter diam;

  auto operator<=>(const ClassKey&) const = default;
};

ClassKey level1_key(const Graph& g);

/// Stable 64-bit digest of a class key, rendered as 16 hex digits; identical
/// across runs and platforms so reports stay diffable.
std::string class_key_digest(const ClassKey& key);

/// Exact partition of a listing by level-1 key. Value order follows input
/// order; map order makes iteration deterministic.
std::map<ClassKey, std::vector<Graph>> partition_classes(std::span<const Graph> graphs);

/// Sorted multiset of the deck's card certificates: equal signatures exactly
/// when the decks are isomorphic as multisets of unlabeled graphs.
struct DeckCertificate {
  std::vector<CanonicalCertificate> certs;

  auto operator<=>(const DeckCertificate&) const = default;
};

DeckCertificate deck_signature(const Graph& g);

struct DeckComparison {
  bool isomorphic = false;
  std::uint64_t iso_checks = 0;
};

/// Deck isomorphism with second-level pruning: returns false with zero
/// checks when the degree-sequence bucket profiles differ; otherwise greedily
/// matches cards inside each shared bucket, counting one iso check per card
/// pair tested. A bucket of m cards costs at most m(m+1)/2 checks.
DeckComparison decks_isomorphic_pairwise(const Deck& d1, const Deck& d2);

}  // namespace scdeck
