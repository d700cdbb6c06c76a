#include "pautkit/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace pautkit {

namespace {

void check_vertex(int n, int v) {
  if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
}

}  // namespace

// --- Graph ------------------------------------------------------------------

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("graph order must be in 0..64");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) g.adj_[u] = full_set(n) & ~bit(u);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto row : adj_) total += popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : points_of(adj_[u] & ~full_set(u + 1))) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (u == v) throw std::invalid_argument("graphs have no loops");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

// --- ColoredDigraph ---------------------------------------------------------

ColoredDigraph::ColoredDigraph(int n, int num_colors)
    : n_(n), colors_(num_colors), m_(static_cast<std::size_t>(n) * n, kNone) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("digraph order must be in 0..64");
  if (num_colors < 0) throw std::invalid_argument("negative color count");
}

ColoredDigraph::ColoredDigraph(int n, const std::vector<std::vector<std::pair<int, int>>>& arcs)
    : ColoredDigraph(n, static_cast<int>(arcs.size())) {
  for (int c = 0; c < colors_; ++c)
    for (auto [u, v] : arcs[c]) set_color(u, v, c);
}

void ColoredDigraph::set_color(int u, int v, int c) {
  check_vertex(n_, u);
  check_vertex(n_, v);
  if (c < kNone || c >= colors_) throw std::out_of_range("color index out of range");
  auto& slot = m_[static_cast<std::size_t>(u) * n_ + v];
  if (c != kNone && slot != kNone && slot != c)
    throw std::invalid_argument("edge color sets must be pairwise disjoint");
  slot = c;
}

ColoredDigraph ColoredDigraph::from_graph(const Graph& g) {
  ColoredDigraph d(g.order(), 1);
  for (auto [u, v] : g.edges()) {
    d.set_color(u, v, 0);
    d.set_color(v, u, 0);
  }
  return d;
}

std::vector<std::pair<int, int>> ColoredDigraph::arcs(int c) const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (color(u, v) == c) out.emplace_back(u, v);
  return out;
}

bool ColoredDigraph::is_graph() const {
  if (colors_ > 1) return false;
  for (int u = 0; u < n_; ++u) {
    if (color(u, u) != kNone) return false;
    for (int v = u + 1; v < n_; ++v)
      if (color(u, v) != color(v, u)) return false;
  }
  return true;
}

Graph ColoredDigraph::to_graph() const {
  if (!is_graph()) throw std::invalid_argument("digraph is not a simple graph");
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (color(u, v) != kNone) g.add_edge(u, v);
  return g;
}

// --- Subgraphs and complement -----------------------------------------------

ColoredDigraph induced(const ColoredDigraph& g, PointSet vertices) {
  const auto pts = points_of(vertices & full_set(g.order()));
  const int k = static_cast<int>(pts.size());
  ColoredDigraph out(k, g.num_colors());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.set_color(i, j, g.color(pts[i], pts[j]));
  return out;
}

Graph induced(const Graph& g, PointSet vertices) {
  const auto pts = points_of(vertices & full_set(g.order()));
  const int k = static_cast<int>(pts.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(pts[i], pts[j])) out.add_edge(i, j);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

ColoredDigraph relabel(const ColoredDigraph& g, const std::vector<int>& sigma) {
  const int n = g.order();
  ColoredDigraph out(n, g.num_colors());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) out.set_color(sigma[u], sigma[v], g.color(u, v));
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& sigma) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(sigma[u], sigma[v]);
  return out;
}

// --- Refinement ---------------------------------------------------------------

namespace {

/// Color refinement on the disjoint union of several digraphs so that the
/// resulting colors are comparable across them.
std::vector<std::vector<int>> refine_jointly(const std::vector<const ColoredDigraph*>& gs) {
  using Signature = std::pair<int, std::vector<std::tuple<int, int, int>>>;
  std::vector<std::vector<int>> colors(gs.size());
  {
    std::map<int, int> rank;
    for (auto* g : gs)
      for (int v = 0; v < g->order(); ++v) rank[g->color(v, v)];
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      colors[i].resize(gs[i]->order());
      for (int v = 0; v < gs[i]->order(); ++v) colors[i][v] = rank[gs[i]->color(v, v)];
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<Signature>> sigs(gs.size());
    std::map<Signature, int> rank;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      const auto& g = *gs[i];
      for (int v = 0; v < g.order(); ++v) {
        Signature s{colors[i][v], {}};
        for (int w = 0; w < g.order(); ++w) {
          if (w == v) continue;
          const int out = g.color(v, w), in = g.color(w, v);
          if (out != ColoredDigraph::kNone || in != ColoredDigraph::kNone)
            s.second.emplace_back(out, in, colors[i][w]);
        }
        std::sort(s.second.begin(), s.second.end());
        rank[s];
        sigs[i].push_back(std::move(s));
      }
    }
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t v = 0; v < sigs[i].size(); ++v) colors[i][v] = rank[sigs[i][v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colors;
}

}  // namespace

std::vector<int> refine_colors(const ColoredDigraph& g) { return refine_jointly({&g})[0]; }

// --- Isomorphism ---------------------------------------------------------------

namespace {

class IsoSearch {
 public:
  IsoSearch(const ColoredDigraph& a, const ColoredDigraph& b) : a_(a), b_(b), n_(a.order()) {}

  /// Calls `emit` for each isomorphism in lexicographic order until it
  /// returns false.
  void run(const std::function<bool(const std::vector<int>&)>& emit,
           std::optional<std::pair<int, int>> forced) {
    if (a_.order() != b_.order() || a_.num_colors() != b_.num_colors()) return;
    auto cols = refine_jointly({&a_, &b_});
    ca_ = std::move(cols[0]);
    cb_ = std::move(cols[1]);
    {
      auto x = ca_, y = cb_;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return;
    }
    forced_ = forced;
    sigma_.assign(n_, -1);
    used_ = 0;
    emit_ = &emit;
    stop_ = false;
    extend(0);
  }

 private:
  bool consistent(int u, int v) const {
    if (ca_[u] != cb_[v]) return false;
    if (forced_ && forced_->first == u && forced_->second != v) return false;
    if (forced_ && forced_->second == v && forced_->first != u) return false;
    if (a_.color(u, u) != b_.color(v, v)) return false;
    for (int w = 0; w < u; ++w) {
      const int x = sigma_[w];
      if (a_.color(u, w) != b_.color(v, x) || a_.color(w, u) != b_.color(x, v)) return false;
    }
    return true;
  }

  void extend(int u) {
    if (stop_) return;
    if (u == n_) {
      if (!(*emit_)(sigma_)) stop_ = true;
      return;
    }
    for (int v = 0; v < n_ && !stop_; ++v) {
      if (contains(used_, v) || !consistent(u, v)) continue;
      sigma_[u] = v;
      used_ |= bit(v);
      extend(u + 1);
      used_ &= ~bit(v);
      sigma_[u] = -1;
    }
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  int n_;
  std::vector<int> ca_, cb_, sigma_;
  PointSet used_ = 0;
  std::optional<std::pair<int, int>> forced_;
  const std::function<bool(const std::vector<int>&)>* emit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  std::optional<std::vector<int>> found;
  IsoSearch(a, b).run(
      [&](const std::vector<int>& s) {
        found = s;
        return false;
      },
      std::nullopt);
  return found;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  return is_isomorphic(ColoredDigraph::from_graph(a), ColoredDigraph::from_graph(b));
}

std::vector<std::vector<int>> all_isomorphisms(const ColoredDigraph& a, const ColoredDigraph& b,
                                               std::optional<std::pair<int, int>> forced) {
  std::vector<std::vector<int>> out;
  IsoSearch(a, b).run(
      [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
      },
      forced);
  return out;
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const auto d = ColoredDigraph::from_graph(g);
  return all_isomorphisms(d, d);
}

std::optional<std::vector<int>> is_isomorphic(const ColoredDigraph& a, const ColoredDigraph& b,
                                              std::pair<int, int> forced) {
  std::optional<std::vector<int>> found;
  IsoSearch(a, b).run(
      [&](const std::vector<int>& s) {
        found = s;
        return false;
      },
      forced);
  return found;
}

std::vector<int> vertex_orbits(const Graph& g) {
  const auto d = ColoredDigraph::from_graph(g);
  std::vector<int> orbit(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (orbit[v] >= 0) continue;
    orbit[v] = v;
    for (int w = v + 1; w < g.order(); ++w)
      if (orbit[w] < 0 && g.degree(w) == g.degree(v) && is_isomorphic(d, d, {v, w})) orbit[w] = v;
  }
  return orbit;
}

// --- Canonical form -------------------------------------------------------------

namespace {

class CanonSearch {
 public:
  explicit CanonSearch(const ColoredDigraph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    const auto colors = refine_colors(g_);
    // Positions are assigned cell by cell in increasing refined color.
    cell_of_pos_ = colors;
    std::sort(cell_of_pos_.begin(), cell_of_pos_.end());
    colors_ = colors;
    pos_.assign(n_, -1);
    best_.clear();
    cur_.clear();
    used_ = 0;
    extend(0);
    return best_perm_;
  }

 private:
  int code(int u, int v) const { return g_.color(u, v) + 1; }

  void extend(int k) {
    if (k == n_) {
      if (best_perm_.empty() || cur_ < best_) {
        best_ = cur_;
        best_perm_ = pos_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (contains(used_, v) || colors_[v] != cell_of_pos_[k]) continue;
      const std::size_t mark = cur_.size();
      pos_[k] = v;
      cur_.push_back(code(v, v));
      for (int i = 0; i < k; ++i) {
        cur_.push_back(code(pos_[i], v));
        cur_.push_back(code(v, pos_[i]));
      }
      // Prefixes above the best encoding found so far cannot win.
      const bool prune =
          !best_perm_.empty() &&
          std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(cur_.size()),
                                       cur_.begin(), cur_.end());
      if (!prune) {
        used_ |= bit(v);
        extend(k + 1);
        used_ &= ~bit(v);
      }
      cur_.resize(mark);
      pos_[k] = -1;
    }
  }

  const ColoredDigraph& g_;
  int n_;
  std::vector<int> colors_, cell_of_pos_, pos_, best_perm_;
  std::vector<int> cur_, best_;
  PointSet used_ = 0;
};

}  // namespace

std::vector<int> canonical_labeling(const ColoredDigraph& g) {
  if (g.order() == 0) return {};
  return CanonSearch(g).run();
}

ColoredDigraph canonical_form(const ColoredDigraph& g) {
  const auto pos = canonical_labeling(g);
  std::vector<int> sigma(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) sigma[pos[k]] = static_cast<int>(k);
  return relabel(g, sigma);
}

Graph canonical_form(const Graph& g) {
  return canonical_form(ColoredDigraph::from_graph(g)).to_graph();
}

std::string canonical_key(const Graph& g) { return format_graph6(canonical_form(g)); }

// --- graph6 ---------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  using K = FormatError::Kind;
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError(K::Header, "graph6: empty input");
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw FormatError(K::ByteRange, "graph6: byte " + std::to_string(c) + " at offset " +
                                          std::to_string(i) + " outside 63..126");
    return c - 63;
  };
  int n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw FormatError(K::Header, "graph6: vertex count beyond 64 is not supported");
    if (text.size() < 4) throw FormatError(K::Truncated, "graph6: truncated size header");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
    if (n < 63) throw FormatError(K::Header, "graph6: long size header used for n < 63");
  } else {
    n = byte(0);
    pos = 1;
  }
  if (n > kMaxPoints) throw FormatError(K::Header, "graph6: vertex count " + std::to_string(n) + " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes)
    throw FormatError(K::Truncated, "graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                                        std::to_string(text.size() - pos));
  if (text.size() > pos + bytes) throw FormatError(K::Trailing, "graph6: trailing bytes after edge data");
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  if (bits % 6 != 0) {
    const int last = byte(pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw FormatError(K::Padding, "graph6: nonzero padding bits");
  }
  return g;
}

std::string format_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + ((n >> 12) & 63));
    out += static_cast<char>(63 + ((n >> 6) & 63));
    out += static_cast<char>(63 + (n & 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = filled = 0;
      }
    }
  if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

// --- Edge list ------------------------------------------------------------------

namespace {

std::vector<std::vector<long long>> numeric_lines(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long v;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw FormatError(FormatError::Kind::Syntax,
                          "edge list: non-integer token '" + tok + "' on line " + std::to_string(lineno));
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

ColoredDigraph parse_edgelist(std::string_view text) {
  using K = FormatError::Kind;
  const auto rows = numeric_lines(text);
  if (rows.empty() || rows[0].size() != 2) throw FormatError(K::Header, "edge list: expected header 'n l'");
  const auto n = rows[0][0], l = rows[0][1];
  if (n < 0 || n > kMaxPoints || l < 0 || l > 4096)
    throw FormatError(K::Header, "edge list: header values out of range");
  ColoredDigraph g(static_cast<int>(n), static_cast<int>(l));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != 3) throw FormatError(K::Syntax, "edge list: expected 'c u v'");
    if (r[0] < 1 || r[0] > l || r[1] < 1 || r[1] > n || r[2] < 1 || r[2] > n)
      throw FormatError(K::Range, "edge list: color or vertex out of range");
    try {
      g.set_color(static_cast<int>(r[1] - 1), static_cast<int>(r[2] - 1), static_cast<int>(r[0] - 1));
    } catch (const std::invalid_argument& e) {
      throw FormatError(K::Syntax, std::string("edge list: ") + e.what());
    }
  }
  return g;
}

Graph parse_edgelist_graph(std::string_view text) {
  using K = FormatError::Kind;
  const auto d = parse_edgelist(text);
  if (d.num_colors() > 1) throw FormatError(K::Header, "edge list: a graph uses at most one color");
  Graph g(d.order());
  for (auto [u, v] : d.arcs(0)) {
    if (u == v) throw FormatError(K::Syntax, "edge list: graphs have no loops");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_edgelist(const ColoredDigraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.num_colors()) + "\n";
  for (int c = 0; c < g.num_colors(); ++c)
    for (auto [u, v] : g.arcs(c))
      out += std::to_string(c + 1) + " " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string format_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " 1\n";
  for (auto [u, v] : g.edges()) out += "1 " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

// --- Generators -----------------------------------------------------------------

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("labeled graph generation supports n <= 8");
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1U) g.add_edge(slots[i].first, slots[i].second);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> graph_classes(int n) {
  std::map<std::string, Graph> seen;
  for (const auto& g : all_labeled_graphs(n)) {
    auto c = canonical_form(g);
    seen.emplace(format_graph6(c), std::move(c));
  }
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace pautkit
