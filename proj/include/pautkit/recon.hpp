#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pautkit/graphs.hpp"
#include "pautkit/paut.hpp"

namespace pautkit {

struct DeckEntry {
  int vertex = 0;
  Graph card;
  std::string key;  // canonical_key(card)
};

struct Deck {
  std::vector<DeckEntry> entries;  // by deleted vertex

  /// Sorted card keys: the deck as a multiset.
  std::vector<std::string> keys() const;
};

Deck deck(const Graph& g);

struct PautDeckEntry {
  int vertex = 0;
  /// {f in PAut(g) : dom f and ran f avoid vertex}, on the original ground set.
  InverseSubmonoid monoid;
};

struct PautDeck {
  std::vector<PautDeckEntry> entries;
};

/// With `validate`, each entry is checked against PAut of the card.
PautDeck paut_deck(const Graph& g, const InverseSubmonoid& paut, bool validate = false);
PautDeck paut_deck(const Graph& g, bool validate = false);

/// Renames points above `v` down by one; S must avoid v.
InverseSubmonoid drop_point(const InverseSubmonoid& s, int v);

/// Pairs (i, j), i < j, with isomorphic cards and no automorphism i -> j.
std::vector<std::pair<int, int>> pseudo_similar_pairs(const Graph& g);
/// Increasing k-sets of pairwise pseudo-similar vertices, lexicographic.
std::vector<std::vector<int>> mutually_pseudo_similar(const Graph& g, int k);

enum class DeckMode { Iso, IsoOrComplement };

/// min(canonical_key(g), canonical_key(complement(g))).
std::string iso_or_complement_key(const Graph& g);

bool deck_equal(const Graph& a, const Graph& b, DeckMode mode);

/// Deck(PAut(a)) and Deck(PAut(b)) agree as multisets of monoids up to
/// isomorphism; decided on the cards up to isomorphism and complement.
bool paut_deck_equal(const Graph& a, const Graph& b);

/// Pairs of n-vertex graphs from different iso-or-complement classes whose
/// PAut decks agree.  Each graph is the least graph6 representative of its
/// class; pairs are sorted.
std::vector<std::pair<Graph, Graph>> find_deck_counterexamples(int n, int jobs = 1);

enum class CorpusPredicate { PseudoSimilar, KSet, DeckCounterexample };

struct CorpusMatch {
  std::size_t seq = 0;  // 0-based input line
  std::string graph6;
  /// Vertex sets (pairs or k-sets), 0-based.
  std::vector<std::vector<int>> sets;
  /// For deck counterexamples: an earlier line with an equal PAut deck.
  std::optional<std::size_t> partner;
  std::string partner_graph6;
};

/// Applies the predicate to every graph6 line (blank lines are skipped but
/// still counted) and returns the matches in input order.
std::vector<CorpusMatch> search_corpus(const std::vector<std::string>& lines, CorpusPredicate pred, int k = 3,
                                       int jobs = 1);

}  // namespace pautkit
