#include "pautkit/pperm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace pautkit {

std::vector<int> points_of(PointSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

PointSet set_of(std::span<const int> points) {
  PointSet s = 0;
  for (int p : points) {
    if (p < 0 || p >= kMaxPoints) throw std::out_of_range("point out of range");
    s |= bit(p);
  }
  return s;
}

GroundMismatch::GroundMismatch(int a, int b)
    : std::invalid_argument("ground set mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

namespace {

void check_ground(const PartialPerm& a, const PartialPerm& b) {
  if (a.degree() != b.degree()) throw GroundMismatch(a.degree(), b.degree());
}

}  // namespace

PartialPerm::PartialPerm(int n) {
  if (n < 0 || n > kMaxPoints)
    throw std::invalid_argument("ground set size must be in 0..64, got " + std::to_string(n));
  n_ = static_cast<std::uint8_t>(n);
  img_.fill(kUndefined);
}

PartialPerm::PartialPerm(int n, std::span<const int> dom, std::span<const int> img)
    : PartialPerm(n) {
  if (dom.size() != img.size()) throw std::invalid_argument("dom/img length mismatch");
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const int x = dom[i];
    const int y = img[i];
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("point outside ground set of size " + std::to_string(n));
    if (contains(dom_, x)) throw std::invalid_argument("repeated source point " + std::to_string(x + 1));
    if (contains(ran_, y)) throw std::invalid_argument("repeated target point " + std::to_string(y + 1));
    dom_ |= bit(x);
    ran_ |= bit(y);
    img_[x] = static_cast<std::uint8_t>(y);
  }
}

PartialPerm PartialPerm::partial_identity(int n, PointSet points) {
  PartialPerm f(n);
  if (points & ~full_set(n)) throw std::invalid_argument("partial identity outside ground set");
  f.dom_ = f.ran_ = points;
  for (int x : points_of(points)) f.img_[x] = static_cast<std::uint8_t>(x);
  return f;
}

PartialPerm PartialPerm::point_map(int n, int x, int y) {
  const int d[] = {x};
  const int i[] = {y};
  return PartialPerm(n, d, i);
}

bool PartialPerm::is_idempotent() const {
  if (dom_ != ran_) return false;
  for (int x : points_of(dom_))
    if (img_[x] != x) return false;
  return true;
}

std::vector<std::pair<int, int>> PartialPerm::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x : points_of(dom_)) out.emplace_back(x, img_[x]);
  return out;
}

std::vector<int> PartialPerm::image_tuple() const {
  std::vector<int> out;
  for (int x : points_of(dom_)) out.push_back(img_[x]);
  return out;
}

std::strong_ordering canonical_compare(const PartialPerm& a, const PartialPerm& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.dom_ <=> b.dom_; c != 0) return c;
  // Equal domains put the sentinel at the same positions, so comparing the
  // raw tables compares the image tuples.
  for (int x = 0; x < a.n_; ++x)
    if (auto c = a.img_[x] <=> b.img_[x]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t PartialPerm::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(dom_ * 0x9E3779B97F4A7C15ULL ^ n_);
  for (int x = 0; x < n_; ++x) h = h * 1099511628211ULL ^ img_[x];
  return h;
}

PartialPerm compose(const PartialPerm& g, const PartialPerm& f) {
  check_ground(g, f);
  PartialPerm out(f.n_);
  for (int x : points_of(f.dom_)) {
    const auto y = f.img_[x];
    const auto z = g.img_[y];
    if (z == PartialPerm::kUndefined) continue;
    out.img_[x] = z;
    out.dom_ |= bit(x);
    out.ran_ |= bit(z);
  }
  return out;
}

PartialPerm invert(const PartialPerm& f) {
  PartialPerm out(f.n_);
  out.dom_ = f.ran_;
  out.ran_ = f.dom_;
  for (int x : points_of(f.dom_)) out.img_[f.img_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

PartialPerm restrict(const PartialPerm& f, PointSet points) {
  PartialPerm out(f.n_);
  for (int x : points_of(f.dom_ & points)) {
    out.img_[x] = f.img_[x];
    out.dom_ |= bit(x);
    out.ran_ |= bit(f.img_[x]);
  }
  return out;
}

bool compatible(const PartialPerm& f, const PartialPerm& g) {
  check_ground(f, g);
  const PointSet common = f.dom() & g.dom();
  PointSet common_img = 0;
  for (int x : points_of(common)) {
    if (f(x) != g(x)) return false;
    common_img |= bit(f(x));
  }
  // Outside the common domain the images must be disjoint.
  return ((f.ran() & ~common_img) & (g.ran() & ~common_img)) == 0;
}

std::optional<PartialPerm> join(const PartialPerm& f, const PartialPerm& g) {
  if (!compatible(f, g)) return std::nullopt;
  PartialPerm out = f;
  for (int x : points_of(g.dom_ & ~f.dom_)) {
    out.img_[x] = g.img_[x];
    out.dom_ |= bit(x);
    out.ran_ |= bit(g.img_[x]);
  }
  return out;
}

std::optional<PartialPerm> join_all(std::span<const PartialPerm> fs, int n) {
  PartialPerm acc = PartialPerm::empty(n);
  for (const auto& f : fs) {
    auto j = join(acc, f);
    if (!j) return std::nullopt;
    acc = *j;
  }
  // Pairwise compatibility is equivalent to every prefix join existing for
  // partial permutations, since the running join is their union.
  return acc;
}

bool leq(const PartialPerm& f, const PartialPerm& g) {
  check_ground(f, g);
  return f == restrict(g, f.dom());
}

std::vector<std::vector<int>> CyclePathDecomposition::cycles() const {
  std::vector<std::vector<int>> out;
  for (const auto& m : members)
    if (m.cycle) out.push_back(m.points);
  return out;
}

std::vector<std::vector<int>> CyclePathDecomposition::paths() const {
  std::vector<std::vector<int>> out;
  for (const auto& m : members)
    if (!m.cycle) out.push_back(m.points);
  return out;
}

std::vector<PartialPerm> CyclePathDecomposition::as_pperms(int n) const {
  std::vector<PartialPerm> out;
  for (const auto& m : members) {
    std::vector<int> dom, img;
    const std::size_t k = m.points.size();
    for (std::size_t i = 0; i + 1 < k; ++i) {
      dom.push_back(m.points[i]);
      img.push_back(m.points[i + 1]);
    }
    if (m.cycle) {
      dom.push_back(m.points[k - 1]);
      img.push_back(m.points[0]);
    }
    out.emplace_back(n, dom, img);
  }
  return out;
}

CyclePathDecomposition decompose(const PartialPerm& f) {
  CyclePathDecomposition d;
  PointSet seen = 0;
  const PointSet support = f.dom() | f.ran();
  const int n = f.degree();
  // Paths start at points of the domain outside the range.
  for (int x : points_of(f.dom() & ~f.ran())) {
    CyclePathDecomposition::Member m;
    int p = x;
    while (p >= 0) {
      m.points.push_back(p);
      seen |= bit(p);
      p = f.defined_at(p) ? f(p) : -1;
    }
    d.members.push_back(std::move(m));
  }
  // What remains of the domain is a union of cycles; starting each from its
  // smallest point rotates it canonically.
  for (int x = 0; x < n; ++x) {
    if (!contains(support, x) || contains(seen, x)) continue;
    CyclePathDecomposition::Member m;
    m.cycle = true;
    int p = x;
    do {
      m.points.push_back(p);
      seen |= bit(p);
      p = f(p);
    } while (p != x);
    d.members.push_back(std::move(m));
  }
  std::sort(d.members.begin(), d.members.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.points.begin(), a.points.end()) <
           *std::min_element(b.points.begin(), b.points.end());
  });
  return d;
}

namespace {

class CpnLexer {
 public:
  explicit CpnLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  std::optional<int> integer() {
    skip_ws();
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) return std::nullopt;
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw NotationError("cycle-path notation: " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

PartialPerm parse_term(CpnLexer& lx, int n) {
  bool cycle;
  if (lx.accept("("))
    cycle = true;
  else if (lx.accept("["))
    cycle = false;
  else
    lx.fail("expected '(' or '['");
  std::vector<int> written;
  while (lx.peek() != ')') {
    auto v = lx.integer();
    if (!v) lx.fail("expected a point label");
    if (*v < 1 || *v > n) lx.fail("label " + std::to_string(*v) + " outside 1.." + std::to_string(n));
    written.push_back(*v - 1);
  }
  lx.accept(")");
  // Written order x_k ... x_1 is the reverse of the application order.
  std::vector<int> pts(written.rbegin(), written.rend());
  if (cycle && pts.empty()) return PartialPerm::empty(n);
  if (!cycle) {
    if (pts.size() < 2) lx.fail("a path needs at least two points");
    if (pts.front() == pts.back()) {
      // [x_k ... x_1) with x_1 = x_k denotes a cycle.
      pts.pop_back();
      cycle = true;
    }
  }
  {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      lx.fail("repeated point inside a term");
  }
  std::vector<int> dom, img;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    dom.push_back(pts[i]);
    img.push_back(pts[i + 1]);
  }
  if (cycle) {
    dom.push_back(pts.back());
    img.push_back(pts.front());
  }
  return PartialPerm(n, dom, img);
}

}  // namespace

PartialPerm parse_cpn(std::string_view text, int n) {
  CpnLexer lx(text);
  std::vector<PartialPerm> terms;
  if (lx.done()) lx.fail("empty input");
  terms.push_back(parse_term(lx, n));
  while (!lx.done()) {
    if (!lx.accept("|") && !lx.accept("\xE2\x88\xA8")) lx.fail("expected '|'");
    terms.push_back(parse_term(lx, n));
  }
  auto j = join_all(terms, n);
  if (!j) throw NotationError("cycle-path notation: terms are not compatible");
  return *j;
}

std::string format_cpn(const PartialPerm& f) {
  const auto d = decompose(f);
  if (d.members.empty()) return "()";
  std::string out;
  for (const auto& m : d.members) {
    if (!out.empty()) out += '|';
    out += m.cycle ? '(' : '[';
    for (auto it = m.points.rbegin(); it != m.points.rend(); ++it) {
      if (it != m.points.rbegin()) out += ' ';
      out += std::to_string(*it + 1);
    }
    out += ')';
  }
  return out;
}

std::uint64_t symmetric_inverse_monoid_order(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    std::uint64_t binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    std::uint64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    total += binom * binom * fact;
  }
  return total;
}

std::vector<PartialPerm> all_partial_perms(int n) {
  std::vector<PartialPerm> out;
  std::vector<int> dom, img;
  PointSet used = 0;
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      out.emplace_back(n, dom, img);
      return;
    }
    rec(x + 1);
    for (int y = 0; y < n; ++y) {
      if (contains(used, y)) continue;
      used |= bit(y);
      dom.push_back(x);
      img.push_back(y);
      rec(x + 1);
      dom.pop_back();
      img.pop_back();
      used &= ~bit(y);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace pautkit
