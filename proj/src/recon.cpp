#include "pautkit/recon.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pautkit/parallel.hpp"

namespace pautkit {

std::vector<std::string> Deck::keys() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.key);
  std::sort(out.begin(), out.end());
  return out;
}

Deck deck(const Graph& g) {
  Deck d;
  for (int v = 0; v < g.order(); ++v) {
    DeckEntry e;
    e.vertex = v;
    e.card = induced(g, full_set(g.order()) & ~bit(v));
    e.key = canonical_key(e.card);
    d.entries.push_back(std::move(e));
  }
  return d;
}

InverseSubmonoid drop_point(const InverseSubmonoid& s, int v) {
  std::vector<PartialPerm> out;
  out.reserve(s.size());
  auto down = [v](int p) { return p > v ? p - 1 : p; };
  for (const auto& f : s) {
    if (contains(f.dom() | f.ran(), v)) throw std::invalid_argument("element touches the dropped point");
    std::vector<int> dom, img;
    for (auto [x, y] : f.pairs()) {
      dom.push_back(down(x));
      img.push_back(down(y));
    }
    out.emplace_back(s.degree() - 1, dom, img);
  }
  return InverseSubmonoid(s.degree() - 1, std::move(out));
}

PautDeck paut_deck(const Graph& g, const InverseSubmonoid& paut, bool validate) {
  PautDeck d;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<PartialPerm> keep;
    for (const auto& f : paut)
      if (!contains(f.dom() | f.ran(), v)) keep.push_back(f);
    PautDeckEntry e{v, InverseSubmonoid(g.order(), std::move(keep))};
    if (validate) {
      const auto card = induced(g, full_set(g.order()) & ~bit(v));
      if (!(drop_point(e.monoid, v) == enumerate_paut(card, {.limit = kMaxPoints})))
        throw std::logic_error("PAut deck entry differs from PAut of the card");
    }
    d.entries.push_back(std::move(e));
  }
  return d;
}

PautDeck paut_deck(const Graph& g, bool validate) {
  return paut_deck(g, enumerate_paut(g, {.limit = kMaxPoints}), validate);
}

std::vector<std::pair<int, int>> pseudo_similar_pairs(const Graph& g) {
  const auto d = deck(g);
  const auto orbit = vertex_orbits(g);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (orbit[i] != orbit[j] && d.entries[i].key == d.entries[j].key) out.emplace_back(i, j);
  return out;
}

std::vector<std::vector<int>> mutually_pseudo_similar(const Graph& g, int k) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  if (k < 2 || k > n) return out;
  std::vector<PointSet> adj(n, 0);
  for (auto [i, j] : pseudo_similar_pairs(g)) {
    adj[i] |= bit(j);
    adj[j] |= bit(i);
  }
  std::vector<int> chosen;
  std::function<void(int, PointSet)> grow = [&](int from, PointSet allowed) {
    if (static_cast<int>(chosen.size()) == k) {
      out.push_back(chosen);
      return;
    }
    for (int v = from; v < n; ++v) {
      if (!contains(allowed, v)) continue;
      chosen.push_back(v);
      grow(v + 1, allowed & adj[v]);
      chosen.pop_back();
    }
  };
  grow(0, full_set(n));
  return out;
}

std::string iso_or_complement_key(const Graph& g) {
  return std::min(canonical_key(g), canonical_key(complement(g)));
}

namespace {

std::vector<std::string> class_deck(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& e : deck(g).entries) out.push_back(iso_or_complement_key(e.card));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool deck_equal(const Graph& a, const Graph& b, DeckMode mode) {
  if (a.order() != b.order()) return false;
  if (mode == DeckMode::Iso) return deck(a).keys() == deck(b).keys();
  return class_deck(a) == class_deck(b);
}

bool paut_deck_equal(const Graph& a, const Graph& b) { return deck_equal(a, b, DeckMode::IsoOrComplement); }

std::vector<std::pair<Graph, Graph>> find_deck_counterexamples(int n, int jobs) {
  std::map<std::string, Graph> reps;
  for (const auto& g : graph_classes(n)) {
    const auto key = iso_or_complement_key(g);
    reps.emplace(key, parse_graph6(key));
  }
  std::vector<Graph> classes;
  for (auto& [key, g] : reps) classes.push_back(g);
  std::vector<std::vector<std::string>> decks(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) { decks[i] = class_deck(classes[i]); });
  std::vector<std::pair<Graph, Graph>> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (decks[i] == decks[j]) out.emplace_back(classes[i], classes[j]);
  return out;
}

std::vector<CorpusMatch> search_corpus(const std::vector<std::string>& lines, CorpusPredicate pred, int k,
                                       int jobs) {
  std::vector<std::optional<Graph>> graphs(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      graphs[i] = parse_graph6(lines[i]);
    } catch (const FormatError& e) {
      throw FormatError(e.kind(), "line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  std::vector<std::optional<CorpusMatch>> found(lines.size());
  std::vector<std::vector<std::string>> decks(lines.size());
  std::vector<std::string> class_key(lines.size());
  parallel_for(lines.size(), jobs, [&](std::size_t i) {
    if (!graphs[i]) return;
    const auto& g = *graphs[i];
    CorpusMatch m;
    m.seq = i;
    m.graph6 = format_graph6(g);
    switch (pred) {
      case CorpusPredicate::PseudoSimilar:
        for (auto [a, b] : pseudo_similar_pairs(g)) m.sets.push_back({a, b});
        if (!m.sets.empty()) found[i] = std::move(m);
        break;
      case CorpusPredicate::KSet:
        m.sets = mutually_pseudo_similar(g, k);
        if (!m.sets.empty()) found[i] = std::move(m);
        break;
      case CorpusPredicate::DeckCounterexample:
        decks[i] = class_deck(g);
        class_key[i] = iso_or_complement_key(g);
        break;
    }
  });
  if (pred == CorpusPredicate::DeckCounterexample) {
    // Earliest earlier line with the same PAut deck but another class.
    std::map<std::pair<int, std::vector<std::string>>, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!graphs[i]) continue;
      auto& bucket = seen[{graphs[i]->order(), decks[i]}];
      for (auto j : bucket)
        if (class_key[j] != class_key[i]) {
          CorpusMatch m;
          m.seq = i;
          m.graph6 = format_graph6(*graphs[i]);
          m.partner = j;
          m.partner_graph6 = format_graph6(*graphs[j]);
          found[i] = std::move(m);
          break;
        }
      bucket.push_back(i);
    }
  }
  std::vector<CorpusMatch> out;
  for (auto& m : found)
    if (m) out.push_back(std::move(*m));
  return out;
}

}  // namespace pautkit
