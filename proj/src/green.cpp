#include "pautkit/green.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pautkit/detail/dsu.hpp"

namespace pautkit {

std::size_t DClass::size() const {
  std::size_t total = 0;
  for (const auto& row : cells)
    for (const auto& cell : row) total += cell.size();
  return total;
}

std::size_t DClass::h_class_size() const {
  return cells.empty() || cells[0].empty() ? 0 : cells[0][0].size();
}

bool GreenStructure::below(std::size_t a, std::size_t b) const {
  return std::binary_search(order.begin(), order.end(), std::make_pair(a, b));
}

namespace {

std::size_t must_index(const InverseSubmonoid& s, const PartialPerm& f) {
  auto i = s.index_of(f);
  if (!i) throw std::invalid_argument("element " + format_cpn(f) + " is not in the monoid");
  return *i;
}

std::string set_label(std::uint64_t key) {
  std::string out = "{";
  for (int p : points_of(key)) {
    if (out.size() > 1) out += ',';
    out += std::to_string(p + 1);
  }
  return out + "}";
}

}  // namespace

bool related(const InverseSubmonoid& s, GreenRelation rel, const PartialPerm& f, const PartialPerm& g) {
  must_index(s, f);
  must_index(s, g);
  switch (rel) {
    case GreenRelation::L:
      return f.dom() == g.dom();
    case GreenRelation::R:
      return f.ran() == g.ran();
    case GreenRelation::H:
      return f.dom() == g.dom() && f.ran() == g.ran();
    case GreenRelation::D:
      for (const auto& psi : s)
        if (psi.dom() == f.dom() && psi.ran() == g.ran()) return true;
      return false;
  }
  return false;
}

GreenStructure green_structure(const InverseSubmonoid& s) {
  // Keys are the domains and ranges that occur; an element links its
  // domain to its range, and the linked components are the D-classes.
  std::map<PointSet, std::size_t> key_id;
  for (const auto& f : s) {
    key_id.emplace(f.dom(), 0);
    key_id.emplace(f.ran(), 0);
  }
  std::vector<PointSet> keys;
  for (auto& [k, id] : key_id) {
    id = keys.size();
    keys.push_back(k);
  }
  detail::DisjointSets dsu(keys.size());
  for (const auto& f : s) dsu.unite(key_id[f.dom()], key_id[f.ran()]);

  // Order classes by (rank, smallest key).
  std::map<std::size_t, std::vector<PointSet>> members;
  for (std::size_t i = 0; i < keys.size(); ++i) members[dsu.find(i)].push_back(keys[i]);
  std::vector<std::vector<PointSet>> classes;
  for (auto& [root, ks] : members) classes.push_back(std::move(ks));
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    const int ra = popcount(a.front()), rb = popcount(b.front());
    return ra != rb ? ra < rb : a.front() < b.front();
  });
  std::map<PointSet, std::size_t> class_of_key;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto k : classes[c]) class_of_key[k] = c;

  GreenStructure gs;
  gs.dclasses.resize(classes.size());
  gs.dclass_of.resize(s.size());
  std::vector<std::set<PointSet>> rk(classes.size()), lk(classes.size());
  for (const auto& f : s) {
    const auto c = class_of_key[f.dom()];
    rk[c].insert(f.ran());
    lk[c].insert(f.dom());
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& d = gs.dclasses[c];
    d.rkeys.assign(rk[c].begin(), rk[c].end());
    d.lkeys.assign(lk[c].begin(), lk[c].end());
    d.cells.assign(d.rkeys.size(), std::vector<std::vector<std::size_t>>(d.lkeys.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& f = s[i];
    const auto c = class_of_key[f.dom()];
    gs.dclass_of[i] = c;
    auto& d = gs.dclasses[c];
    const auto r = std::lower_bound(d.rkeys.begin(), d.rkeys.end(), f.ran()) - d.rkeys.begin();
    const auto l = std::lower_bound(d.lkeys.begin(), d.lkeys.end(), f.dom()) - d.lkeys.begin();
    d.cells[r][l].push_back(i);
    if (f.is_idempotent()) d.idempotent_cells.emplace_back(r, l);
  }
  for (auto& d : gs.dclasses) std::sort(d.idempotent_cells.begin(), d.idempotent_cells.end());

  // D_a <= D_b iff some sigma in S has dom sigma = dom a and ran sigma
  // inside dom b.
  const std::size_t nc = classes.size();
  std::vector<std::vector<bool>> le(nc, std::vector<bool>(nc, false));
  for (std::size_t c = 0; c < nc; ++c) le[c][c] = true;
  for (const auto& sigma : s) {
    const auto lower = class_of_key[sigma.dom()];
    for (std::size_t k = 0; k < keys.size(); ++k)
      if ((sigma.ran() & ~keys[k]) == 0) le[lower][class_of_key[keys[k]]] = true;
  }
  for (std::size_t k = 0; k < nc; ++k)
    for (std::size_t i = 0; i < nc; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < nc; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < nc; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (i != j && le[i][j]) gs.order.emplace_back(i, j);

  // Strictly smaller classes have strictly smaller rank, so the rank order
  // of `classes` is a topological order.
  for (std::size_t b = 0; b < nc; ++b) {
    int h = 0;
    for (std::size_t a = 0; a < b; ++a)
      if (le[a][b]) h = std::max(h, gs.dclasses[a].height + 1);
    gs.dclasses[b].height = h;
  }
  return gs;
}

std::vector<std::pair<std::size_t, std::size_t>> dclass_order_definitional(const InverseSubmonoid& s,
                                                                           const GreenStructure& gs) {
  std::vector<std::size_t> rep(gs.dclasses.size());
  for (std::size_t c = 0; c < gs.dclasses.size(); ++c) {
    const auto& d = gs.dclasses[c];
    for (const auto& row : d.cells)
      for (const auto& cell : row)
        if (!cell.empty()) rep[c] = cell.front();
    if (!d.idempotent_cells.empty())
      rep[c] = d.cells[d.idempotent_cells[0].first][d.idempotent_cells[0].second].front();
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < rep.size(); ++a)
    for (std::size_t b = 0; b < rep.size(); ++b) {
      if (a == b) continue;
      const auto& target = s[rep[a]];
      const auto& mid = s[rep[b]];
      bool found = false;
      for (const auto& y : s) {
        const auto by = compose(mid, y);
        if ((target.dom() & ~by.dom()) != 0) continue;
        for (const auto& x : s)
          if (compose(x, by) == target) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (found) out.emplace_back(a, b);
    }
  return out;
}

namespace {

template <typename Label>
std::vector<std::string> label_dclasses(const InverseSubmonoid& s, GreenStructure& gs, Label&& label) {
  std::vector<std::string> out;
  for (auto& d : gs.dclasses) {
    std::optional<std::string> seen;
    for (auto [r, l] : d.idempotent_cells) {
      const auto& e = s[d.cells[r][l].front()];
      auto lab = label(e.dom());
      if (seen && *seen != lab)
        throw std::logic_error("D-class idempotents induce non-isomorphic subgraphs");
      seen = std::move(lab);
    }
    d.label = seen;
    out.push_back(seen.value_or(""));
  }
  return out;
}

}  // namespace

std::vector<std::string> dclass_subgraph_correspondence(const Graph& g, const InverseSubmonoid& s,
                                                        GreenStructure& gs) {
  return label_dclasses(s, gs, [&](PointSet y) { return canonical_key(induced(g, y)); });
}

std::vector<std::string> dclass_subgraph_correspondence(const ColoredDigraph& g, const InverseSubmonoid& s,
                                                        GreenStructure& gs) {
  return label_dclasses(s, gs, [&](PointSet y) { return format_edgelist(canonical_form(induced(g, y))); });
}

int height(const InverseSubmonoid& s, const GreenStructure& gs, const PartialPerm& f) {
  return gs.dclasses[gs.dclass_of[must_index(s, f)]].height;
}

int natural_height(const InverseSubmonoid& s, const PartialPerm& f) {
  must_index(s, f);
  // Elements below f are its restrictions; walk them by increasing rank.
  const auto dom = points_of(f.dom());
  const std::size_t k = dom.size();
  std::map<PointSet, int> h;
  int best = -1;
  std::vector<PointSet> subsets;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    PointSet y = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((m >> i) & 1U) y |= bit(dom[i]);
    subsets.push_back(y);
  }
  std::sort(subsets.begin(), subsets.end(),
            [](PointSet a, PointSet b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
  for (auto y : subsets) {
    if (!s.contains(restrict(f, y))) continue;
    int hy = 0;
    for (auto& [z, hz] : h)
      if (z != y && (z & ~y) == 0) hy = std::max(hy, hz + 1);
    h[y] = hy;
    if (y == f.dom()) best = hy;
  }
  return best;
}

std::string render_eggboxes(const InverseSubmonoid& s, const GreenStructure& gs) {
  std::ostringstream os;
  for (std::size_t c = 0; c < gs.dclasses.size(); ++c) {
    const auto& d = gs.dclasses[c];
    os << "D-class " << c << "  height " << d.height << "  size " << d.size() << "  "
       << d.rkeys.size() << "x" << d.lkeys.size();
    if (d.label) os << "  graph " << *d.label;
    os << "\n";
    std::vector<std::vector<std::string>> text(d.rkeys.size(), std::vector<std::string>(d.lkeys.size()));
    std::size_t width = 0;
    for (std::size_t r = 0; r < d.rkeys.size(); ++r)
      for (std::size_t l = 0; l < d.lkeys.size(); ++l) {
        std::string t;
        for (auto i : d.cells[r][l]) {
          if (!t.empty()) t += ", ";
          t += format_cpn(s[i]);
        }
        if (d.rkeys[r] == d.lkeys[l]) t = "*" + t;
        width = std::max(width, t.size());
        text[r][l] = std::move(t);
      }
    std::size_t key_width = 4;
    for (auto k : d.rkeys) key_width = std::max(key_width, set_label(k).size());
    os << std::string(key_width, ' ');
    for (auto k : d.lkeys) {
      auto lab = set_label(k);
      os << " | " << lab << std::string(width - std::min(width, lab.size()), ' ');
    }
    os << "\n";
    for (std::size_t r = 0; r < d.rkeys.size(); ++r) {
      auto lab = set_label(d.rkeys[r]);
      os << lab << std::string(key_width - lab.size(), ' ');
      for (std::size_t l = 0; l < d.lkeys.size(); ++l)
        os << " | " << text[r][l] << std::string(width - text[r][l].size(), ' ');
      os << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace pautkit
