#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pautkit {

/// Set of points of a ground set of size at most 64, one bit per point.
using PointSet = std::uint64_t;

inline constexpr int kMaxPoints = 64;

inline int popcount(PointSet s) { return std::popcount(s); }
inline bool contains(PointSet s, int p) { return (s >> p) & 1U; }
inline PointSet bit(int p) { return PointSet{1} << p; }
inline PointSet full_set(int n) { return n >= 64 ? ~PointSet{0} : (bit(n) - 1); }

std::vector<int> points_of(PointSet s);
PointSet set_of(std::span<const int> points);

/// Thrown when two operands live on different ground sets.
class GroundMismatch : public std::invalid_argument {
 public:
  GroundMismatch(int a, int b);
};

/// Thrown on malformed cycle-path notation.
class NotationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An injective partial map on {0, ..., n-1}.
///
/// The map is stored as a target-of-source table with a sentinel for
/// undefined points, together with domain and range bitsets.  Values are
/// immutable once built; every operation returns a new value.
class PartialPerm {
 public:
  static constexpr std::uint8_t kUndefined = 0xFF;

  PartialPerm() : PartialPerm(0) {}
  explicit PartialPerm(int n);

  /// Builds the map dom[i] -> img[i]; throws on non-injective or
  /// out-of-range input.
  PartialPerm(int n, std::span<const int> dom, std::span<const int> img);

  static PartialPerm identity(int n) { return partial_identity(n, full_set(n)); }
  static PartialPerm empty(int n) { return PartialPerm(n); }
  static PartialPerm partial_identity(int n, PointSet points);
  /// Rank-1 map x -> y.
  static PartialPerm point_map(int n, int x, int y);

  int degree() const { return n_; }
  int rank() const { return popcount(dom_); }
  PointSet dom() const { return dom_; }
  PointSet ran() const { return ran_; }
  bool defined_at(int x) const { return contains(dom_, x); }
  /// Image of x, or -1 if x is outside the domain.
  int operator()(int x) const {
    return img_[x] == kUndefined ? -1 : static_cast<int>(img_[x]);
  }
  bool is_idempotent() const;
  bool is_empty() const { return dom_ == 0; }

  /// Pairs (x, f(x)) in increasing order of x.
  std::vector<std::pair<int, int>> pairs() const;
  /// Images of the domain points in increasing order of source.
  std::vector<int> image_tuple() const;

  friend bool operator==(const PartialPerm& a, const PartialPerm& b) {
    return a.n_ == b.n_ && a.dom_ == b.dom_ && a.img_ == b.img_;
  }

  /// Canonical order: (rank, dom bitset value, image tuple).
  friend std::strong_ordering canonical_compare(const PartialPerm& a, const PartialPerm& b);

  std::size_t hash() const;

 private:
  std::uint8_t n_ = 0;
  PointSet dom_ = 0;
  PointSet ran_ = 0;
  std::array<std::uint8_t, kMaxPoints> img_;

  friend PartialPerm compose(const PartialPerm&, const PartialPerm&);
  friend PartialPerm invert(const PartialPerm&);
  friend PartialPerm restrict(const PartialPerm&, PointSet);
  friend std::optional<PartialPerm> join(const PartialPerm&, const PartialPerm&);
};

struct CanonicalLess {
  bool operator()(const PartialPerm& a, const PartialPerm& b) const {
    return canonical_compare(a, b) < 0;
  }
};

struct PartialPermHash {
  std::size_t operator()(const PartialPerm& f) const { return f.hash(); }
};

/// g after f: x -> g(f(x)) on f^{-1}(ran f ∩ dom g).
PartialPerm compose(const PartialPerm& g, const PartialPerm& f);
PartialPerm invert(const PartialPerm& f);
/// f restricted to dom f ∩ points.
PartialPerm restrict(const PartialPerm& f, PointSet points);
bool compatible(const PartialPerm& f, const PartialPerm& g);
/// Least upper bound in the restriction order, if f and g are compatible.
std::optional<PartialPerm> join(const PartialPerm& f, const PartialPerm& g);
std::optional<PartialPerm> join_all(std::span<const PartialPerm> fs, int n);
/// Restriction order: f is the restriction of g to dom f.
bool leq(const PartialPerm& f, const PartialPerm& g);

/// Orbit decomposition.  A cycle is stored in application order
/// x1 -> x2 -> ... -> xk -> x1 with x1 its smallest point; a path is stored
/// x1 -> x2 -> ... -> xk where x1 is outside the range and xk outside the
/// domain.  Members are sorted by their smallest point.
struct CyclePathDecomposition {
  struct Member {
    bool cycle = false;
    std::vector<int> points;
    friend bool operator==(const Member&, const Member&) = default;
  };
  std::vector<Member> members;

  std::vector<std::vector<int>> cycles() const;
  std::vector<std::vector<int>> paths() const;
  /// Each member as a partial permutation of the same ground set.
  std::vector<PartialPerm> as_pperms(int n) const;
};

CyclePathDecomposition decompose(const PartialPerm& f);

/// Cycle-path notation with 1-based labels, e.g. "(2 1)|[5 4 3)".
/// The written order is the reverse of the application order:
/// "(2 1)" maps 1 to 2 and "[5 4 3)" maps 3 to 4 and 4 to 5.
PartialPerm parse_cpn(std::string_view text, int n);
std::string format_cpn(const PartialPerm& f);

/// Number of partial permutations of an n-set: sum_k C(n,k)^2 k!.
std::uint64_t symmetric_inverse_monoid_order(int n);

/// Every partial permutation of {0..n-1}, in canonical order.
std::vector<PartialPerm> all_partial_perms(int n);

}  // namespace pautkit
