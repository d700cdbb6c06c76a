#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pautkit/graphs.hpp"
#include "pautkit/pperm.hpp"

namespace pautkit {

/// A set of partial permutations of one ground set, kept in canonical order.
///
/// The intended use is an inverse submonoid of I_X (contains id_X, closed
/// under composition and inversion).  Construction only sorts and
/// deduplicates; `validate()` checks the algebraic closure on demand.
class InverseSubmonoid {
 public:
  InverseSubmonoid() = default;
  InverseSubmonoid(int n, std::vector<PartialPerm> elements);

  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<PartialPerm>& elements() const { return elements_; }
  const PartialPerm& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const PartialPerm& f) const { return index_of(f).has_value(); }
  std::optional<std::size_t> index_of(const PartialPerm& f) const;

  /// Element counts per rank 0..n.
  std::vector<std::size_t> rank_counts() const;

  /// Empty string when S contains id_X and is closed under compose and
  /// invert; otherwise a description of the first failure.
  std::string validate() const;

  friend bool operator==(const InverseSubmonoid&, const InverseSubmonoid&) = default;

 private:
  int n_ = 0;
  std::vector<PartialPerm> elements_;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  /// Soft cap on the vertex count.
  int limit = 8;
  int jobs = 1;
};

/// Bytes needed to hold |I_n| elements; an upper bound for any PAut on n
/// vertices.
std::size_t paut_memory_bound(int n);

bool is_partial_automorphism(const ColoredDigraph& g, const PartialPerm& f);
bool is_partial_automorphism(const Graph& g, const PartialPerm& f);

/// Membership decided from the 2-element restrictions alone (rank >= 2);
/// rank <= 1 falls back to the direct test.
bool rank2_membership_reduction(const ColoredDigraph& g, const PartialPerm& f);

/// PAut(g) by depth-first extension of partial maps, pruning on the first
/// violated colored-adjacency constraint.
InverseSubmonoid enumerate_paut(const ColoredDigraph& g, const EnumerateOptions& opts = {});
InverseSubmonoid enumerate_paut(const Graph& g, const EnumerateOptions& opts = {});

/// Oracle: filters all of I_X through is_partial_automorphism (n <= 6).
InverseSubmonoid enumerate_paut_by_filter(const ColoredDigraph& g);

/// Rank-n elements of PAut(g).
std::vector<PartialPerm> aut_group(const ColoredDigraph& g);
std::vector<PartialPerm> aut_group(const Graph& g);

/// Inverse submonoid generated by `gens` together with all partial
/// identities on n points (a full inverse submonoid).
InverseSubmonoid full_closure(int n, const std::vector<PartialPerm>& gens);
/// Inverse submonoid generated by `gens` and id_X.
InverseSubmonoid closure(int n, const std::vector<PartialPerm>& gens);

}  // namespace pautkit
