#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pautkit/pperm.hpp"

namespace pautkit {

/// Simple undirected loopless graph on {0..n-1}, stored as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return contains(adj_[u], v); }
  PointSet neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return popcount(adj_[u]); }
  int edge_count() const;
  /// Edges {u, v} with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<PointSet> adj_;
};

/// Edge-colored digraph (V, E_1, ..., E_l).  Color sets are pairwise
/// disjoint, so every ordered pair (u, v) carries at most one color; the
/// structure is stored as an n x n matrix of color indices with -1 meaning
/// "no arc".  Loops are allowed.
class ColoredDigraph {
 public:
  static constexpr int kNone = -1;

  ColoredDigraph() = default;
  ColoredDigraph(int n, int num_colors);
  /// arcs[c] lists the arcs of color c; throws if sets overlap or an
  /// endpoint is out of range.
  ColoredDigraph(int n, const std::vector<std::vector<std::pair<int, int>>>& arcs);

  static ColoredDigraph from_graph(const Graph& g);

  int order() const { return n_; }
  int num_colors() const { return colors_; }
  int color(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }
  void set_color(int u, int v, int c);
  std::vector<std::pair<int, int>> arcs(int c) const;

  /// True when the digraph is the image of a simple graph: one color at most,
  /// symmetric, no loops.
  bool is_graph() const;
  Graph to_graph() const;

  friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

 private:
  int n_ = 0;
  int colors_ = 0;
  std::vector<int> m_;
};

/// Subgraph induced on `vertices`, relabeled 0..|Y|-1 in increasing order.
ColoredDigraph induced(const ColoredDigraph& g, PointSet vertices);
Graph induced(const Graph& g, PointSet vertices);

Graph complement(const Graph& g);

/// Color-preserving bijection sigma with (u,v) in E_c iff (sigma u, sigma v)
/// in E_c; the lexicographically least one (as the sequence sigma(0),
/// sigma(1), ...) when any exists.
std::optional<std::vector<int>> is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b);
std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b);

/// All isomorphisms a -> b, in lexicographic order.  With `forced` set, only
/// those mapping forced->first to forced->second.
std::vector<std::vector<int>> all_isomorphisms(const ColoredDigraph& a, const ColoredDigraph& b,
                                               std::optional<std::pair<int, int>> forced = {});
std::vector<std::vector<int>> automorphisms(const Graph& g);
/// Least isomorphism mapping forced.first to forced.second, if any.
std::optional<std::vector<int>> is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b,
                                              std::pair<int, int> forced);
/// orbit[v] = least vertex in the Aut(g)-orbit of v.
std::vector<int> vertex_orbits(const Graph& g);

/// Isomorphism-invariant vertex coloring by iterated degree refinement.
std::vector<int> refine_colors(const ColoredDigraph& g);

/// position -> vertex permutation realising the canonical form.
std::vector<int> canonical_labeling(const ColoredDigraph& g);
ColoredDigraph canonical_form(const ColoredDigraph& g);
Graph canonical_form(const Graph& g);
/// graph6 of the canonical form; a convenient dictionary key.
std::string canonical_key(const Graph& g);

/// Applies the vertex map sigma (old -> new).
ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<int>& sigma);
Graph relabel(const Graph& g, const std::vector<int>& sigma);

/// Raised on malformed graph6 or edge-list input.
class FormatError : public std::runtime_error {
 public:
  enum class Kind { Header, ByteRange, Truncated, Trailing, Padding, Syntax, Range };
  FormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

/// "n l" header then "c u v" lines, all 1-based.  A Graph is written with
/// l = 1 and one line per undirected edge; loading it symmetrises.
ColoredDigraph parse_edgelist(std::string_view text);
Graph parse_edgelist_graph(std::string_view text);
std::string format_edgelist(const ColoredDigraph& g);
std::string format_edgelist(const Graph& g);

/// Every labeled graph on n vertices, by edge mask (n <= 8).
std::vector<Graph> all_labeled_graphs(int n);
/// One canonical representative per isomorphism class, sorted by graph6.
std::vector<Graph> graph_classes(int n);

}  // namespace pautkit
