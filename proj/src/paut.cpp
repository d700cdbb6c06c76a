#include "pautkit/paut.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "pautkit/parallel.hpp"

namespace pautkit {

InverseSubmonoid::InverseSubmonoid(int n, std::vector<PartialPerm> elements)
    : n_(n), elements_(std::move(elements)) {
  for (const auto& f : elements_)
    if (f.degree() != n) throw GroundMismatch(n, f.degree());
  std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

std::optional<std::size_t> InverseSubmonoid::index_of(const PartialPerm& f) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), f, CanonicalLess{});
  if (it == elements_.end() || !(*it == f)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::size_t> InverseSubmonoid::rank_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& f : elements_) ++out[f.rank()];
  return out;
}

std::string InverseSubmonoid::validate() const {
  if (!contains(PartialPerm::identity(n_))) return "identity missing";
  for (const auto& f : elements_) {
    if (!contains(invert(f))) return "not closed under inverse: " + format_cpn(f);
    for (const auto& g : elements_)
      if (!contains(compose(g, f)))
        return "not closed under composition: " + format_cpn(g) + " after " + format_cpn(f);
  }
  return {};
}

std::size_t paut_memory_bound(int n) {
  return static_cast<std::size_t>(symmetric_inverse_monoid_order(n)) * sizeof(PartialPerm);
}

bool is_partial_automorphism(const ColoredDigraph& g, const PartialPerm& f) {
  if (g.order() != f.degree()) throw GroundMismatch(g.order(), f.degree());
  const auto dom = points_of(f.dom());
  for (int u : dom)
    for (int w : dom)
      if (g.color(u, w) != g.color(f(u), f(w))) return false;
  return true;
}

bool is_partial_automorphism(const Graph& g, const PartialPerm& f) {
  if (g.order() != f.degree()) throw GroundMismatch(g.order(), f.degree());
  const auto dom = points_of(f.dom());
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      if (g.adjacent(dom[i], dom[j]) != g.adjacent(f(dom[i]), f(dom[j]))) return false;
  return true;
}

bool rank2_membership_reduction(const ColoredDigraph& g, const PartialPerm& f) {
  if (f.rank() < 2) return is_partial_automorphism(g, f);
  const auto dom = points_of(f.dom());
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      if (!is_partial_automorphism(g, restrict(f, bit(dom[i]) | bit(dom[j])))) return false;
  return true;
}

namespace {

class PautEnumerator {
 public:
  explicit PautEnumerator(const ColoredDigraph& g) : g_(g), n_(g.order()) {}

  /// All partial automorphisms whose smallest domain point is x, mapped to y.
  std::vector<PartialPerm> rooted_at(int x, int y) {
    out_.clear();
    dom_.clear();
    img_.clear();
    used_ = 0;
    if (fits(x, y)) {
      push(x, y);
      extend(x + 1);
    }
    return std::move(out_);
  }

 private:
  bool fits(int u, int v) const {
    if (g_.color(u, u) != g_.color(v, v)) return false;
    for (std::size_t i = 0; i < dom_.size(); ++i) {
      const int w = dom_[i], x = img_[i];
      if (g_.color(u, w) != g_.color(v, x) || g_.color(w, u) != g_.color(x, v)) return false;
    }
    return true;
  }
  void push(int u, int v) {
    dom_.push_back(u);
    img_.push_back(v);
    used_ |= bit(v);
  }
  void pop() {
    used_ &= ~bit(img_.back());
    dom_.pop_back();
    img_.pop_back();
  }
  void extend(int u) {
    if (u == n_) {
      out_.emplace_back(n_, dom_, img_);
      return;
    }
    extend(u + 1);
    for (int v = 0; v < n_; ++v) {
      if (contains(used_, v) || !fits(u, v)) continue;
      push(u, v);
      extend(u + 1);
      pop();
    }
  }

  const ColoredDigraph& g_;
  int n_;
  std::vector<int> dom_, img_;
  PointSet used_ = 0;
  std::vector<PartialPerm> out_;
};

}  // namespace

InverseSubmonoid enumerate_paut(const ColoredDigraph& g, const EnumerateOptions& opts) {
  const int n = g.order();
  if (n > opts.limit)
    throw LimitExceeded("PAut enumeration on " + std::to_string(n) + " vertices exceeds the soft limit of " +
                        std::to_string(opts.limit) + " (about " + std::to_string(paut_memory_bound(n) >> 20) +
                        " MiB worst case)");
  const std::size_t tasks = static_cast<std::size_t>(n) * n;
  std::vector<std::vector<PartialPerm>> parts(tasks);
  parallel_for(tasks, opts.jobs, [&](std::size_t t) {
    PautEnumerator e(g);
    parts[t] = e.rooted_at(static_cast<int>(t / n), static_cast<int>(t % n));
  });
  std::vector<PartialPerm> all{PartialPerm::empty(n)};
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return InverseSubmonoid(n, std::move(all));
}

InverseSubmonoid enumerate_paut(const Graph& g, const EnumerateOptions& opts) {
  return enumerate_paut(ColoredDigraph::from_graph(g), opts);
}

InverseSubmonoid enumerate_paut_by_filter(const ColoredDigraph& g) {
  if (g.order() > 6) throw LimitExceeded("filter oracle is limited to n <= 6");
  std::vector<PartialPerm> keep;
  for (auto& f : all_partial_perms(g.order()))
    if (is_partial_automorphism(g, f)) keep.push_back(f);
  return InverseSubmonoid(g.order(), std::move(keep));
}

std::vector<PartialPerm> aut_group(const ColoredDigraph& g) {
  std::vector<PartialPerm> out;
  std::vector<int> dom(g.order());
  for (int i = 0; i < g.order(); ++i) dom[i] = i;
  for (const auto& sigma : all_isomorphisms(g, g)) out.emplace_back(g.order(), dom, sigma);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<PartialPerm> aut_group(const Graph& g) { return aut_group(ColoredDigraph::from_graph(g)); }

namespace {

InverseSubmonoid close_from(int n, std::vector<PartialPerm> gens) {
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < k; ++i) gens.push_back(invert(gens[i]));
  std::unordered_set<PartialPerm, PartialPermHash> seen;
  std::deque<PartialPerm> queue;
  const auto id = PartialPerm::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const auto f = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto h = compose(f, g);
      if (seen.insert(h).second) queue.push_back(std::move(h));
    }
  }
  return InverseSubmonoid(n, std::vector<PartialPerm>(seen.begin(), seen.end()));
}

}  // namespace

InverseSubmonoid closure(int n, const std::vector<PartialPerm>& gens) { return close_from(n, gens); }

InverseSubmonoid full_closure(int n, const std::vector<PartialPerm>& gens) {
  auto all = gens;
  // The rank n-1 partial identities generate every idempotent.
  for (int x = 0; x < n; ++x) all.push_back(PartialPerm::partial_identity(n, full_set(n) & ~bit(x)));
  return close_from(n, std::move(all));
}

}  // namespace pautkit
