#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pautkit/abstract.hpp"
#include "pautkit/graphs.hpp"
#include "pautkit/paut.hpp"

namespace pautkit {

/// Outcome of one condition.  A failure always carries a witness: elements
/// of I_X for concrete monoids, element indices for tables.
struct Verdict {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<PartialPerm> witness;
  std::vector<int> element_witness;
};

struct ConditionReport {
  std::vector<Verdict> verdicts;

  bool passed() const;
  const Verdict* find(const std::string& name) const;
  /// First failing verdict, if any.
  const Verdict* first_failure() const;
};

class ConditionsFailed : public std::runtime_error {
 public:
  explicit ConditionsFailed(ConditionReport r);
  const ConditionReport& report() const { return report_; }

 private:
  ConditionReport report_;
};

/// Every partial identity of X lies in S.  Witness: the canonically least
/// missing one.
Verdict check_full(const InverseSubmonoid& s);

/// Order on condition-U violators: rank, then fewest moved points, then the
/// moved set as a bitset, then canonical order.
struct ViolatorLess {
  bool operator()(const PartialPerm& a, const PartialPerm& b) const;
};

/// Every f in I_X of rank >= 3 whose restrictions of rank 1 and 2 all lie in
/// S is itself in S.  Witness: the least violator under ViolatorLess.
Verdict check_condition_U(const InverseSubmonoid& s);

/// The same property from its definition: every set A of pairwise compatible
/// rank-1 elements of S, |A| >= 3, whose pairwise joins lie in S, has its
/// join in S.  Exponential; oracle use only.
Verdict check_condition_U_definitional(const InverseSubmonoid& s);

/// Conditions full, condition-U, rank2-dclasses, rank2-hclasses.
ConditionReport check_graph_conditions(const InverseSubmonoid& s, int jobs = 1);
/// Conditions full, condition-U.
ConditionReport check_digraph_conditions(const InverseSubmonoid& s, int jobs = 1);

/// Graph whose edges are the pairs {u, v} with id_{u,v} in the rank-2
/// D-class of id_{0,1}.  Throws ConditionsFailed; with `validate`, checks
/// PAut(result) == S and throws std::logic_error otherwise.
Graph build_graph(const InverseSubmonoid& s, bool validate = false);

/// One loop color per rank-1 D-class, then one color per rank-2 D-class with
/// arcs (u1, u2) such that v1 -> u1, v2 -> u2 lies in S, where {v1 < v2} is
/// the least idempotent domain of the class.
ColoredDigraph build_colored_digraph(const InverseSubmonoid& s, bool validate = false);

struct Realization {
  /// "graph", "digraph" or "none".
  std::string theorem = "none";
  ConditionReport report;
  /// Image of the restricted Munn representation, when it was computed.
  std::optional<InverseSubmonoid> image;
  std::optional<Graph> graph;
  std::optional<ColoredDigraph> digraph;
};

/// Decides whether an abstract inverse monoid is isomorphic to PAut of a
/// graph or of an edge-colored digraph and builds one.
Realization realize_abstract(const InverseMonoid& t, bool validate = false, int jobs = 1);

/// PAut(a) and PAut(b) are isomorphic.
bool paut_isomorphic(const Graph& a, const Graph& b);

}  // namespace pautkit
