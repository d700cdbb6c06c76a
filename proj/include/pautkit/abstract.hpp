#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pautkit/green.hpp"
#include "pautkit/paut.hpp"
#include "pautkit/pperm.hpp"

namespace pautkit {

/// A finite monoid given by its multiplication table; mul(a, b) is the
/// product a b.  For tables built from partial permutations a b means
/// "apply b, then a".
struct MulTable {
  int m = 0;
  int identity = 0;
  std::vector<int> table;  // row-major, m * m
  std::vector<std::string> names;

  int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * m + b]; }
};

struct ValidationReport {
  bool ok = true;
  /// "shape", "associativity", "identity", "inverse-existence" or
  /// "inverse-uniqueness" when !ok.
  std::string axiom;
  std::vector<int> witness;
  std::string message;
};

/// Checks the inverse-monoid axioms in the order listed above and reports the
/// first failure with its lexicographically least witness.
ValidationReport validate(const MulTable& t, int jobs = 1);

class InvalidTable : public std::invalid_argument {
 public:
  explicit InvalidTable(ValidationReport r);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class NoZeroElement : public std::domain_error {
 public:
  NoZeroElement() : std::domain_error("monoid has no zero element") {}
};

/// A validated finite inverse monoid.
class InverseMonoid {
 public:
  /// Throws InvalidTable when validation fails.
  explicit InverseMonoid(MulTable t);

  int size() const { return t_.m; }
  int identity() const { return t_.identity; }
  int mul(int a, int b) const { return t_.mul(a, b); }
  int inverse(int a) const { return inv_[a]; }
  bool is_idempotent(int a) const { return mul(a, a) == a; }
  const std::vector<int>& idempotents() const { return idem_; }
  std::optional<int> zero() const { return zero_; }
  const MulTable& table() const { return t_; }

 private:
  MulTable t_;
  std::vector<int> inv_;
  std::vector<int> idem_;
  std::optional<int> zero_;
};

/// E(S) with its semilattice order.
struct IdempotentLattice {
  std::vector<int> idempotents;
  std::optional<int> zero;
  /// Idempotents covering the zero, ascending.
  std::vector<int> atoms;
};

IdempotentLattice idempotent_lattice(const InverseMonoid& s);

bool natural_leq(const InverseMonoid& s, int a, int b);
bool compatible_abs(const InverseMonoid& s, int a, int b);
/// Least upper bound in the natural order; none if it does not exist, which
/// can happen even for compatible elements.
std::optional<int> join_abs(const InverseMonoid& s, int a, int b);

bool is_boolean(const InverseMonoid& s);

/// delta_s : [s^-1 s] -> [s s^-1], e -> s e s^-1, as (e, image) pairs in
/// increasing order of e.
std::vector<std::pair<int, int>> munn(const InverseMonoid& s, int elem);

struct RestrictedMunn {
  /// atoms[i] is the element index standing for point i.
  std::vector<int> atoms;
  /// images[s] = alpha(s) as a partial permutation of the atoms.
  std::vector<PartialPerm> images;
};

/// Throws NoZeroElement without a zero, std::length_error with more than 64
/// atoms.
RestrictedMunn restricted_munn(const InverseMonoid& s);

bool is_fundamental(const InverseMonoid& s);
/// Pair s < t with delta_s = delta_t, least t first.
std::optional<std::pair<int, int>> fundamental_witness(const InverseMonoid& s);

/// Green's relations from their definitions on the table.  Keys are the
/// indices of the row/column idempotents.
GreenStructure green_abs(const InverseMonoid& s);

/// Table of a submonoid of I_X, indexed by its canonical element order.
MulTable to_table(const InverseSubmonoid& s);

/// Table with element i renamed perm[i].
MulTable relabel_table(const MulTable& t, const std::vector<int>& perm);

/// Isomorphism a -> b by backtracking over generator images, if one exists.
std::optional<std::vector<int>> monoid_isomorphism(const InverseMonoid& a, const InverseMonoid& b);

}  // namespace pautkit
