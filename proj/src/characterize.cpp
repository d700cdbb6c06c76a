#include "pautkit/characterize.hpp"

#include <algorithm>
#include <functional>

#include "pautkit/green.hpp"
#include "pautkit/parallel.hpp"

namespace pautkit {

bool ConditionReport::passed() const { return first_failure() == nullptr; }

const Verdict* ConditionReport::find(const std::string& name) const {
  for (const auto& v : verdicts)
    if (v.name == name) return &v;
  return nullptr;
}

const Verdict* ConditionReport::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.passed) return &v;
  return nullptr;
}

namespace {

std::string failure_message(const ConditionReport& r) {
  const auto* f = r.first_failure();
  if (!f) return "conditions failed";
  std::string msg = "condition " + f->name + " fails";
  if (!f->detail.empty()) msg += ": " + f->detail;
  return msg;
}

// k-subsets of {0..n-1} in increasing bitset order.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k > n) return true;
  if (k == 0) return fn(PointSet{0});
  const PointSet universe = full_set(n);
  PointSet x = full_set(k);
  while (true) {
    if (!fn(x)) return false;
    const PointSet c = x & (~x + 1);
    const PointSet r = x + c;
    if (r == 0) return true;
    x = (((r ^ x) >> 2) / c) | r;
    if ((x & ~universe) != 0) return true;
  }
}

PartialPerm pair_map(int n, int u, int v, int w, int x) {
  const int dom[] = {u, w};
  const int img[] = {v, x};
  return PartialPerm(n, dom, img);
}

}  // namespace

ConditionsFailed::ConditionsFailed(ConditionReport r) : std::runtime_error(failure_message(r)), report_(std::move(r)) {}

Verdict check_full(const InverseSubmonoid& s) {
  Verdict v;
  v.name = "full";
  const int n = s.degree();
  std::size_t idempotents = 0;
  for (const auto& f : s)
    if (f.is_idempotent()) ++idempotents;
  if (n < 63 && idempotents == (std::size_t{1} << n)) return v;
  for (int k = 0; k <= n && v.passed; ++k)
    for_each_subset_of_size(n, k, [&](PointSet y) {
      auto e = PartialPerm::partial_identity(n, y);
      if (s.contains(e)) return true;
      v.passed = false;
      v.detail = "missing partial identity " + format_cpn(e);
      v.witness = {std::move(e)};
      return false;
    });
  return v;
}

namespace {

PointSet moved_points(const PartialPerm& f) {
  PointSet m = 0;
  for (int x : points_of(f.dom()))
    if (f(x) != x) m |= bit(x);
  return m;
}

}  // namespace

bool ViolatorLess::operator()(const PartialPerm& a, const PartialPerm& b) const {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  const auto ma = moved_points(a), mb = moved_points(b);
  if (popcount(ma) != popcount(mb)) return popcount(ma) < popcount(mb);
  if (ma != mb) return ma < mb;
  return CanonicalLess{}(a, b);
}

namespace {

// Depth-limited search for maps of a given rank whose restrictions of rank
// 1 and 2 all lie in S, built in increasing domain order.
class LocalMaps {
 public:
  explicit LocalMaps(const InverseSubmonoid& s) : s_(s), n_(s.degree()) {
    one_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) one_[u * n_ + v] = s.contains(PartialPerm::point_map(n_, u, v));
  }

  /// Least violator of the given rank, if any.
  std::optional<PartialPerm> violator(int rank) {
    rank_ = rank;
    best_.reset();
    dom_.clear();
    img_.clear();
    used_ = 0;
    extend(0);
    return best_;
  }

 private:
  void extend(int from) {
    if (static_cast<int>(dom_.size()) == rank_) {
      PartialPerm f(n_, dom_, img_);
      if (!s_.contains(f) && (!best_ || ViolatorLess{}(f, *best_))) best_ = std::move(f);
      return;
    }
    const int need = rank_ - static_cast<int>(dom_.size());
    for (int u = from; u <= n_ - need; ++u)
      for (int v = 0; v < n_; ++v) {
        if (contains(used_, v) || !one_[u * n_ + v]) continue;
        bool ok = true;
        for (std::size_t i = 0; i < dom_.size() && ok; ++i)
          ok = s_.contains(pair_map(n_, dom_[i], img_[i], u, v));
        if (!ok) continue;
        dom_.push_back(u);
        img_.push_back(v);
        used_ |= bit(v);
        extend(u + 1);
        used_ &= ~bit(v);
        dom_.pop_back();
        img_.pop_back();
      }
  }

  const InverseSubmonoid& s_;
  int n_;
  int rank_ = 0;
  std::vector<char> one_;
  std::vector<int> dom_, img_;
  PointSet used_ = 0;
  std::optional<PartialPerm> best_;
};

}  // namespace

Verdict check_condition_U(const InverseSubmonoid& s) {
  Verdict v;
  v.name = "condition-U";
  LocalMaps search(s);
  for (int rank = 3; rank <= s.degree(); ++rank)
    if (auto f = search.violator(rank)) {
      v.passed = false;
      v.detail = "join " + format_cpn(*f) + " of compatible rank-1 elements is missing";
      v.witness = {std::move(*f)};
      break;
    }
  return v;
}

Verdict check_condition_U_definitional(const InverseSubmonoid& s) {
  Verdict v;
  v.name = "condition-U";
  const int n = s.degree();
  std::vector<PartialPerm> atoms;
  for (const auto& f : s)
    if (f.rank() == 1) atoms.push_back(f);
  std::optional<PartialPerm> best;
  std::vector<PartialPerm> chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (chosen.size() >= 3) {
      auto j = join_all(chosen, n);
      if (j && !s.contains(*j)) {
        if (!best || ViolatorLess{}(*j, *best)) best = *j;
      }
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      bool ok = true;
      for (const auto& a : chosen) {
        if (!compatible(a, atoms[i])) {
          ok = false;
          break;
        }
        auto j = join(a, atoms[i]);
        if (!j || !s.contains(*j)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(atoms[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  if (best) {
    v.passed = false;
    v.detail = "join " + format_cpn(*best) + " of compatible rank-1 elements is missing";
    v.witness = {std::move(*best)};
  }
  return v;
}

namespace {

std::vector<std::size_t> rank2_classes(const GreenStructure& gs) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < gs.dclasses.size(); ++c)
    if (popcount(gs.dclasses[c].lkeys.front()) == 2) out.push_back(c);
  return out;
}

std::vector<Verdict> rank2_verdicts(const InverseSubmonoid& s) {
  Verdict count, hcls;
  count.name = "rank2-dclasses";
  hcls.name = "rank2-hclasses";
  if (s.degree() < 2) {
    count.detail = hcls.detail = "trivial case, theorem hypothesis not met";
    return {count, hcls};
  }
  const auto gs = green_structure(s);
  const auto classes = rank2_classes(gs);
  count.detail = std::to_string(classes.size()) + " rank-2 D-classes";
  if (classes.empty() || classes.size() > 2) {
    count.passed = false;
    for (auto c : classes) {
      const auto& d = gs.dclasses[c];
      if (!d.idempotent_cells.empty()) {
        const auto [r, l] = d.idempotent_cells.front();
        count.witness.push_back(s[d.cells[r][l].front()]);
      }
    }
  }
  for (auto c : classes) {
    const auto& d = gs.dclasses[c];
    if (d.h_class_size() != 1) continue;
    std::optional<PartialPerm> e;
    for (auto [r, l] : d.idempotent_cells) {
      const auto& f = s[d.cells[r][l].front()];
      if (!e || CanonicalLess{}(f, *e)) e = f;
    }
    if (e && (hcls.passed || CanonicalLess{}(*e, hcls.witness.front()))) {
      hcls.passed = false;
      hcls.detail = "H-class of " + format_cpn(*e) + " is trivial";
      hcls.witness = {*e};
    }
  }
  return {count, hcls};
}

}  // namespace

ConditionReport check_graph_conditions(const InverseSubmonoid& s, int jobs) {
  std::vector<std::vector<Verdict>> parts(3);
  parallel_for(3, jobs, [&](std::size_t i) {
    if (i == 0) parts[0] = {check_full(s)};
    if (i == 1) parts[1] = {check_condition_U(s)};
    if (i == 2) parts[2] = rank2_verdicts(s);
  });
  ConditionReport r;
  for (auto& p : parts) r.verdicts.insert(r.verdicts.end(), p.begin(), p.end());
  return r;
}

ConditionReport check_digraph_conditions(const InverseSubmonoid& s, int jobs) {
  std::vector<Verdict> parts(2);
  parallel_for(2, jobs, [&](std::size_t i) { parts[i] = i == 0 ? check_full(s) : check_condition_U(s); });
  ConditionReport r;
  r.verdicts = std::move(parts);
  return r;
}

Graph build_graph(const InverseSubmonoid& s, bool validate) {
  auto report = check_graph_conditions(s);
  if (!report.passed()) throw ConditionsFailed(std::move(report));
  const int n = s.degree();
  Graph g(n);
  if (n >= 2) {
    const auto gs = green_structure(s);
    auto class_of = [&](PointSet y) { return gs.dclass_of[*s.index_of(PartialPerm::partial_identity(n, y))]; };
    const auto de = class_of(bit(0) | bit(1));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (class_of(bit(u) | bit(v)) == de) g.add_edge(u, v);
  }
  if (validate && !(enumerate_paut(g, {.limit = kMaxPoints}) == s))
    throw std::logic_error("PAut of the constructed graph differs from S");
  return g;
}

ColoredDigraph build_colored_digraph(const InverseSubmonoid& s, bool validate) {
  auto report = check_digraph_conditions(s);
  if (!report.passed()) throw ConditionsFailed(std::move(report));
  const int n = s.degree();
  const auto gs = green_structure(s);
  std::vector<std::vector<std::pair<int, int>>> arcs;
  for (const auto& d : gs.dclasses) {
    const PointSet rep = d.lkeys.front();
    const int rank = popcount(rep);
    if (rank == 1) {
      auto& loops = arcs.emplace_back();
      for (auto key : d.lkeys) {
        const int v = points_of(key).front();
        loops.emplace_back(v, v);
      }
    } else if (rank == 2) {
      const auto pts = points_of(rep);
      auto& color = arcs.emplace_back();
      for (const auto& row : d.cells)
        for (const auto& cell : row)
          for (auto i : cell)
            if (s[i].dom() == rep) color.emplace_back(s[i](pts[0]), s[i](pts[1]));
      std::sort(color.begin(), color.end());
    }
  }
  ColoredDigraph g(n, arcs);
  if (validate && !(enumerate_paut(g, {.limit = kMaxPoints}) == s))
    throw std::logic_error("PAut of the constructed digraph differs from S");
  return g;
}

Realization realize_abstract(const InverseMonoid& t, bool validate, int jobs) {
  Realization out;
  Verdict boolean;
  boolean.name = "boolean";
  const auto lat = idempotent_lattice(t);
  if (!is_boolean(t)) {
    boolean.passed = false;
    if (!lat.zero) {
      boolean.detail = "no zero element";
    } else {
      boolean.detail = std::to_string(lat.idempotents.size()) + " idempotents over " +
                       std::to_string(lat.atoms.size()) + " atoms";
      boolean.element_witness = lat.atoms;
    }
  }
  out.report.verdicts.push_back(boolean);
  Verdict fundamental;
  fundamental.name = "fundamental";
  if (auto w = fundamental_witness(t)) {
    fundamental.passed = false;
    fundamental.detail = "delta_" + std::to_string(w->first) + " = delta_" + std::to_string(w->second);
    fundamental.element_witness = {w->first, w->second};
  }
  out.report.verdicts.push_back(fundamental);
  if (!boolean.passed || !fundamental.passed) return out;

  const auto rm = restricted_munn(t);
  const int k = static_cast<int>(rm.atoms.size());
  InverseSubmonoid image(k, rm.images);
  if (image.size() != static_cast<std::size_t>(t.size()))
    throw std::logic_error("restricted Munn representation is not injective on a fundamental Boolean monoid");
  auto graph_report = check_graph_conditions(image, jobs);
  for (const auto& v : graph_report.verdicts) out.report.verdicts.push_back(v);
  if (graph_report.passed()) {
    out.graph = build_graph(image, validate);
    out.theorem = "graph";
  } else if (graph_report.find("full")->passed && graph_report.find("condition-U")->passed) {
    out.digraph = build_colored_digraph(image, validate);
    out.theorem = "digraph";
  }
  out.image = std::move(image);
  return out;
}

bool paut_isomorphic(const Graph& a, const Graph& b) {
  return is_isomorphic(a, b).has_value() || is_isomorphic(a, complement(b)).has_value();
}

}  // namespace pautkit
