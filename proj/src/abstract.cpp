#include "pautkit/abstract.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "pautkit/detail/dsu.hpp"
#include "pautkit/parallel.hpp"

namespace pautkit {

namespace {

ValidationReport fail(std::string axiom, std::vector<int> witness, std::string message) {
  ValidationReport r;
  r.ok = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  r.message = std::move(message);
  return r;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ", ";
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

ValidationReport validate(const MulTable& t, int jobs) {
  const int m = t.m;
  if (m < 1) return fail("shape", {}, "a monoid needs at least one element");
  if (t.table.size() != static_cast<std::size_t>(m) * m)
    return fail("shape", {}, "table has " + std::to_string(t.table.size()) + " entries, expected " +
                                 std::to_string(static_cast<std::size_t>(m) * m));
  if (!t.names.empty() && t.names.size() != static_cast<std::size_t>(m))
    return fail("shape", {}, "names list has the wrong length");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int c = t.mul(a, b);
      if (c < 0 || c >= m) return fail("shape", {a, b}, "product out of range");
    }
  if (t.identity < 0 || t.identity >= m) return fail("shape", {t.identity}, "identity index out of range");

  // Least failing triple per first index, then the least over all.
  std::vector<std::vector<int>> bad(static_cast<std::size_t>(m));
  parallel_for(static_cast<std::size_t>(m), jobs, [&](std::size_t i) {
    const int a = static_cast<int>(i);
    for (int b = 0; b < m; ++b) {
      const int ab = t.mul(a, b);
      for (int c = 0; c < m; ++c)
        if (t.mul(ab, c) != t.mul(a, t.mul(b, c))) {
          bad[i] = {a, b, c};
          return;
        }
    }
  });
  for (const auto& w : bad)
    if (!w.empty()) return fail("associativity", w, "(ab)c != a(bc) at (" + join_ints(w) + ")");

  for (int a = 0; a < m; ++a)
    if (t.mul(t.identity, a) != a || t.mul(a, t.identity) != a)
      return fail("identity", {a}, "identity is not two-sided at " + std::to_string(a));

  for (int a = 0; a < m; ++a) {
    std::vector<int> inv;
    for (int b = 0; b < m && inv.size() < 2; ++b)
      if (t.mul(t.mul(a, b), a) == a && t.mul(t.mul(b, a), b) == b) inv.push_back(b);
    if (inv.empty()) return fail("inverse-existence", {a}, "element " + std::to_string(a) + " has no inverse");
    if (inv.size() > 1)
      return fail("inverse-uniqueness", {a, inv[0], inv[1]},
                  "element " + std::to_string(a) + " has inverses " + join_ints(inv));
  }
  return {};
}

InvalidTable::InvalidTable(ValidationReport r)
    : std::invalid_argument("invalid inverse monoid table: " + r.axiom + ": " + r.message), report_(std::move(r)) {}

InverseMonoid::InverseMonoid(MulTable t) : t_(std::move(t)) {
  auto report = validate(t_);
  if (!report.ok) throw InvalidTable(std::move(report));
  const int m = t_.m;
  inv_.assign(m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (mul(mul(a, b), a) == a && mul(mul(b, a), b) == b) {
        inv_[a] = b;
        break;
      }
  for (int a = 0; a < m; ++a)
    if (is_idempotent(a)) idem_.push_back(a);
  for (int z = 0; z < m && !zero_; ++z) {
    bool is_zero = true;
    for (int a = 0; a < m && is_zero; ++a) is_zero = mul(z, a) == z && mul(a, z) == z;
    if (is_zero) zero_ = z;
  }
}

IdempotentLattice idempotent_lattice(const InverseMonoid& s) {
  IdempotentLattice out;
  out.idempotents = s.idempotents();
  out.zero = s.zero();
  if (!out.zero) return out;
  const int z = *out.zero;
  for (int e : out.idempotents) {
    if (e == z) continue;
    bool atom = true;
    for (int f : out.idempotents)
      if (f != z && f != e && s.mul(e, f) == f) {
        atom = false;
        break;
      }
    if (atom) out.atoms.push_back(e);
  }
  return out;
}

bool natural_leq(const InverseMonoid& s, int a, int b) {
  for (int e : s.idempotents())
    if (s.mul(b, e) == a) return true;
  return false;
}

bool compatible_abs(const InverseMonoid& s, int a, int b) {
  return s.is_idempotent(s.mul(a, s.inverse(b))) && s.is_idempotent(s.mul(s.inverse(a), b));
}

std::optional<int> join_abs(const InverseMonoid& s, int a, int b) {
  std::vector<int> upper;
  for (int c = 0; c < s.size(); ++c)
    if (natural_leq(s, a, c) && natural_leq(s, b, c)) upper.push_back(c);
  for (int c : upper) {
    bool least = true;
    for (int u : upper)
      if (!natural_leq(s, c, u)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

bool is_boolean(const InverseMonoid& s) {
  const auto lat = idempotent_lattice(s);
  if (!lat.zero) return false;
  const std::size_t k = lat.atoms.size();
  if (k >= 63 || lat.idempotents.size() != (std::size_t{1} << k)) return false;
  std::map<int, std::uint64_t> below;
  std::vector<bool> hit(std::size_t{1} << k, false);
  for (int e : lat.idempotents) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (s.mul(e, lat.atoms[i]) == lat.atoms[i]) mask |= std::uint64_t{1} << i;
    if (hit[mask]) return false;
    hit[mask] = true;
    below[e] = mask;
  }
  for (int e : lat.idempotents)
    for (int f : lat.idempotents)
      if (below[s.mul(e, f)] != (below[e] & below[f])) return false;
  return true;
}

std::vector<std::pair<int, int>> munn(const InverseMonoid& s, int elem) {
  const int src = s.mul(s.inverse(elem), elem);
  std::vector<std::pair<int, int>> out;
  for (int e : s.idempotents())
    if (s.mul(src, e) == e) out.emplace_back(e, s.mul(s.mul(elem, e), s.inverse(elem)));
  return out;
}

RestrictedMunn restricted_munn(const InverseMonoid& s) {
  const auto lat = idempotent_lattice(s);
  if (!lat.zero) throw NoZeroElement();
  if (lat.atoms.size() > static_cast<std::size_t>(kMaxPoints))
    throw std::length_error("more than 64 atoms");
  RestrictedMunn out;
  out.atoms = lat.atoms;
  const int k = static_cast<int>(lat.atoms.size());
  std::map<int, int> point_of;
  for (int i = 0; i < k; ++i) point_of[lat.atoms[i]] = i;
  out.images.reserve(s.size());
  for (int a = 0; a < s.size(); ++a) {
    const int src = s.mul(s.inverse(a), a);
    std::vector<int> dom, img;
    for (int i = 0; i < k; ++i) {
      const int v = lat.atoms[i];
      if (s.mul(src, v) != v) continue;
      const auto it = point_of.find(s.mul(s.mul(a, v), s.inverse(a)));
      if (it == point_of.end()) throw std::logic_error("Munn image of an atom is not an atom");
      dom.push_back(i);
      img.push_back(it->second);
    }
    out.images.emplace_back(k, dom, img);
  }
  return out;
}

std::optional<std::pair<int, int>> fundamental_witness(const InverseMonoid& s) {
  std::map<std::vector<std::pair<int, int>>, int> first;
  for (int a = 0; a < s.size(); ++a) {
    auto [it, fresh] = first.emplace(munn(s, a), a);
    if (!fresh) return std::make_pair(it->second, a);
  }
  return std::nullopt;
}

bool is_fundamental(const InverseMonoid& s) { return !fundamental_witness(s); }

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(int m) { return Bits((static_cast<std::size_t>(m) + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }

}  // namespace

GreenStructure green_abs(const InverseMonoid& s) {
  const int m = s.size();
  // Principal left and right ideals.
  std::vector<Bits> left(m, make_bits(m)), right(m, make_bits(m));
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < m; ++x) {
      set_bit(left[a], s.mul(x, a));
      set_bit(right[a], s.mul(a, x));
    }
  // The idempotent generating the same ideal names each L- and R-class.
  std::map<Bits, int> lname, rname;
  for (int e : s.idempotents()) {
    lname.emplace(left[e], e);
    rname.emplace(right[e], e);
  }
  std::vector<int> lkey(m), rkey(m);
  for (int a = 0; a < m; ++a) {
    lkey[a] = lname.at(left[a]);
    rkey[a] = rname.at(right[a]);
  }

  detail::DisjointSets dsu(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    dsu.unite(a, lkey[a]);
    dsu.unite(a, rkey[a]);
  }
  std::map<std::size_t, std::vector<int>> groups;
  for (int a = 0; a < m; ++a) groups[dsu.find(a)].push_back(a);

  struct Raw {
    std::vector<int> members;
    Bits ideal;
    std::size_t ideal_size = 0;
  };
  std::vector<Raw> raw;
  for (auto& [root, members] : groups) {
    Raw r;
    r.members = std::move(members);
    r.ideal = make_bits(m);
    const int b = r.members.front();
    for (int x = 0; x < m; ++x) {
      const int xb = s.mul(x, b);
      for (int y = 0; y < m; ++y) set_bit(r.ideal, s.mul(xb, y));
    }
    for (auto w : r.ideal) r.ideal_size += static_cast<std::size_t>(__builtin_popcountll(w));
    raw.push_back(std::move(r));
  }
  // Smaller two-sided ideals first: a linear extension of the D-order.
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return a.ideal_size != b.ideal_size ? a.ideal_size < b.ideal_size : a.members.front() < b.members.front();
  });

  const std::size_t nc = raw.size();
  GreenStructure gs;
  gs.dclasses.resize(nc);
  gs.dclass_of.resize(m);
  for (std::size_t c = 0; c < nc; ++c) {
    auto& d = gs.dclasses[c];
    std::set<std::uint64_t> rk, lk;
    for (int a : raw[c].members) {
      rk.insert(static_cast<std::uint64_t>(rkey[a]));
      lk.insert(static_cast<std::uint64_t>(lkey[a]));
      gs.dclass_of[a] = c;
    }
    d.rkeys.assign(rk.begin(), rk.end());
    d.lkeys.assign(lk.begin(), lk.end());
    d.cells.assign(d.rkeys.size(), std::vector<std::vector<std::size_t>>(d.lkeys.size()));
    for (int a : raw[c].members) {
      const auto r = std::lower_bound(d.rkeys.begin(), d.rkeys.end(), rkey[a]) - d.rkeys.begin();
      const auto l = std::lower_bound(d.lkeys.begin(), d.lkeys.end(), lkey[a]) - d.lkeys.begin();
      d.cells[r][l].push_back(static_cast<std::size_t>(a));
      if (s.is_idempotent(a)) d.idempotent_cells.emplace_back(r, l);
    }
    std::sort(d.idempotent_cells.begin(), d.idempotent_cells.end());
  }
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b)
      if (a != b && test_bit(raw[b].ideal, raw[a].members.front())) gs.order.emplace_back(a, b);
  std::sort(gs.order.begin(), gs.order.end());
  for (std::size_t b = 0; b < nc; ++b) {
    int h = 0;
    for (std::size_t a = 0; a < b; ++a)
      if (gs.below(a, b)) h = std::max(h, gs.dclasses[a].height + 1);
    gs.dclasses[b].height = h;
  }
  return gs;
}

MulTable to_table(const InverseSubmonoid& s) {
  MulTable t;
  t.m = static_cast<int>(s.size());
  t.table.resize(s.size() * s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    t.names.push_back(format_cpn(s[i]));
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto k = s.index_of(compose(s[i], s[j]));
      if (!k) throw std::invalid_argument("element set is not closed under composition");
      t.table[i * s.size() + j] = static_cast<int>(*k);
    }
  }
  const auto id = s.index_of(PartialPerm::identity(s.degree()));
  if (!id) throw std::invalid_argument("element set does not contain the identity");
  t.identity = static_cast<int>(*id);
  return t;
}

MulTable relabel_table(const MulTable& t, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(t.m)) throw std::invalid_argument("relabeling has the wrong length");
  MulTable out;
  out.m = t.m;
  out.identity = perm[t.identity];
  out.table.resize(t.table.size());
  for (int a = 0; a < t.m; ++a)
    for (int b = 0; b < t.m; ++b)
      out.table[static_cast<std::size_t>(perm[a]) * t.m + perm[b]] = perm[t.mul(a, b)];
  if (!t.names.empty()) {
    out.names.resize(t.names.size());
    for (int a = 0; a < t.m; ++a) out.names[perm[a]] = t.names[a];
  }
  return out;
}

namespace {

using Invariant = std::tuple<bool, bool, int, int, int, int, int>;

std::vector<Invariant> invariants(const InverseMonoid& s) {
  const int m = s.size();
  std::vector<Invariant> out(m);
  std::vector<char> seen_l(m), seen_r(m);
  for (int a = 0; a < m; ++a) {
    std::fill(seen_l.begin(), seen_l.end(), 0);
    std::fill(seen_r.begin(), seen_r.end(), 0);
    int nl = 0, nr = 0;
    for (int x = 0; x < m; ++x) {
      if (!seen_l[s.mul(x, a)]++) ++nl;
      if (!seen_r[s.mul(a, x)]++) ++nr;
    }
    // Index and period of the cyclic submonoid generated by a.
    std::map<int, int> first;
    int p = a, k = 1;
    while (first.emplace(p, k).second) {
      p = s.mul(p, a);
      ++k;
    }
    const int index = first[p];
    const int period = k - index;
    int below = 0;
    const int src = s.mul(s.inverse(a), a);
    for (int e : s.idempotents())
      if (s.mul(src, e) == e) ++below;
    out[a] = {s.is_idempotent(a), s.inverse(a) == a, nl, nr, index, period, below};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const InverseMonoid& a, const InverseMonoid& b) : a_(a), b_(b), inv_a_(invariants(a)), inv_b_(invariants(b)) {
    pick_generators();
  }

  std::optional<std::vector<int>> run() {
    std::vector<int> phi(a_.size(), -1), back(b_.size(), -1);
    phi[a_.identity()] = b_.identity();
    back[b_.identity()] = a_.identity();
    if (search(0, phi, back)) return result_;
    return std::nullopt;
  }

 private:
  void pick_generators() {
    // Rare invariants first so the branching stays small.
    std::map<Invariant, int> freq;
    for (const auto& v : inv_a_) ++freq[v];
    std::vector<int> order(a_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return freq[inv_a_[x]] < freq[inv_a_[y]]; });
    std::vector<char> in(a_.size(), 0);
    in[a_.identity()] = 1;
    for (int g : order) {
      if (in[g]) continue;
      gens_.push_back(g);
      // Recompute the generated submonoid.
      std::fill(in.begin(), in.end(), 0);
      std::vector<int> queue{a_.identity()};
      in[a_.identity()] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int h : gens_) {
          const int y = a_.mul(queue[i], h);
          if (!in[y]) {
            in[y] = 1;
            queue.push_back(y);
          }
        }
    }
  }

  // Extends phi from the submonoid generated by gens_[0..k) by right
  // multiplication; false on a clash.
  bool propagate(std::size_t k, std::vector<int>& phi, std::vector<int>& back) const {
    std::vector<int> queue;
    for (int x = 0; x < a_.size(); ++x)
      if (phi[x] >= 0) queue.push_back(x);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        const int y = a_.mul(x, gens_[j]);
        const int want = b_.mul(phi[x], phi[gens_[j]]);
        if (phi[y] >= 0) {
          if (phi[y] != want) return false;
          continue;
        }
        if (back[want] >= 0) return false;
        phi[y] = want;
        back[want] = y;
        queue.push_back(y);
      }
    }
    return true;
  }

  bool search(std::size_t k, const std::vector<int>& phi, const std::vector<int>& back) {
    if (k == gens_.size()) {
      for (int x = 0; x < a_.size(); ++x)
        for (int y = 0; y < a_.size(); ++y)
          if (phi[a_.mul(x, y)] != b_.mul(phi[x], phi[y])) return false;
      result_ = phi;
      return true;
    }
    const int g = gens_[k];
    if (phi[g] >= 0) {
      auto p = phi, q = back;
      return propagate(k + 1, p, q) && search(k + 1, p, q);
    }
    for (int c = 0; c < b_.size(); ++c) {
      if (back[c] >= 0 || inv_b_[c] != inv_a_[g]) continue;
      auto p = phi, q = back;
      p[g] = c;
      q[c] = g;
      if (propagate(k + 1, p, q) && search(k + 1, p, q)) return true;
    }
    return false;
  }

  const InverseMonoid& a_;
  const InverseMonoid& b_;
  std::vector<Invariant> inv_a_, inv_b_;
  std::vector<int> gens_;
  std::vector<int> result_;
};

}  // namespace

std::optional<std::vector<int>> monoid_isomorphism(const InverseMonoid& a, const InverseMonoid& b) {
  if (a.size() != b.size() || a.idempotents().size() != b.idempotents().size()) return std::nullopt;
  auto ia = invariants(a), ib = invariants(b);
  std::sort(ia.begin(), ia.end());
  std::sort(ib.begin(), ib.end());
  if (ia != ib) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace pautkit
