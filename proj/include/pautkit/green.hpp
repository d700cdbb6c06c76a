#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pautkit/graphs.hpp"
#include "pautkit/paut.hpp"

namespace pautkit {

enum class GreenRelation { L, R, H, D };

/// One D-class drawn as an eggbox: rows are R-classes, columns L-classes.
///
/// For a submonoid of I_X the keys are range (row) and domain (column)
/// bitsets; for an abstract table they are the indices of the idempotents
/// s s^-1 (row) and s^-1 s (column).  Keys are sorted ascending, so the
/// idempotent cells sit where the row key equals the column key.
struct DClass {
  std::vector<std::uint64_t> rkeys;
  std::vector<std::uint64_t> lkeys;
  /// cells[row][col] holds element indices.
  std::vector<std::vector<std::vector<std::size_t>>> cells;
  std::vector<std::pair<std::size_t, std::size_t>> idempotent_cells;
  int height = 0;
  std::optional<std::string> label;

  std::size_t size() const;
  std::size_t h_class_size() const;
};

struct GreenStructure {
  std::vector<DClass> dclasses;
  /// Strict order pairs (a, b) meaning D_a < D_b, transitively closed.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  /// Element index -> D-class index.
  std::vector<std::size_t> dclass_of;

  bool below(std::size_t a, std::size_t b) const;
};

/// Green's relations inside an inverse submonoid of I_X; throws
/// std::invalid_argument when f or g is not an element of S.
bool related(const InverseSubmonoid& s, GreenRelation rel, const PartialPerm& f, const PartialPerm& g);

GreenStructure green_structure(const InverseSubmonoid& s);

/// D-class order from the definition D_a <= D_b iff a = x b y, evaluated
/// on class representatives.  Quadratic in |S| per pair; validation only.
std::vector<std::pair<std::size_t, std::size_t>> dclass_order_definitional(const InverseSubmonoid& s,
                                                                           const GreenStructure& gs);

/// Labels each D-class of PAut(g) with the canonical form of the subgraph
/// induced on the domain of its idempotents.  Throws std::logic_error if two
/// idempotents of one class give different labels.
std::vector<std::string> dclass_subgraph_correspondence(const Graph& g, const InverseSubmonoid& s,
                                                        GreenStructure& gs);
std::vector<std::string> dclass_subgraph_correspondence(const ColoredDigraph& g, const InverseSubmonoid& s,
                                                        GreenStructure& gs);

/// Height of f's D-class in the D-poset.
int height(const InverseSubmonoid& s, const GreenStructure& gs, const PartialPerm& f);
/// Height of f in the natural partial order of S (longest chain of proper
/// restrictions inside S).
int natural_height(const InverseSubmonoid& s, const PartialPerm& f);

/// Plain-text eggbox diagrams.
std::string render_eggboxes(const InverseSubmonoid& s, const GreenStructure& gs);

}  // namespace pautkit
