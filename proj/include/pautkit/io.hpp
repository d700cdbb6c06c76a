#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pautkit/abstract.hpp"
#include "pautkit/characterize.hpp"
#include "pautkit/graphs.hpp"
#include "pautkit/green.hpp"
#include "pautkit/paut.hpp"

namespace pautkit {

using json = nlohmann::ordered_json;

/// Malformed JSON document for one of the formats below.
class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": n, "elements": [{"dom": [...], "img": [...]}, ...], "rank_counts": [...]}
/// with 1-based points.  On input an element may also be a cycle-path string.
json monoid_to_json(const InverseSubmonoid& s);
InverseSubmonoid monoid_from_json(const json& j);

/// {"m": m, "identity": i, "table": [[...], ...]} with 0-based indices and an
/// optional "names" list.
json table_to_json(const MulTable& t);
MulTable table_from_json(const json& j);

/// {"dclasses": [{"height", "rkeys", "lkeys", "cells", "label"}], "poset": [[a, b], ...]}.
/// Concrete keys are 1-based point sets, cells hold cycle-path strings.
json eggbox_to_json(const InverseSubmonoid& s, const GreenStructure& gs);
/// Abstract keys and cells are element indices.
json eggbox_to_json(const GreenStructure& gs);

json verdict_to_json(const Verdict& v);
/// {"conditions": {...}, "construction": ..., "theorem": ...}
json report_to_json(const ConditionReport& r, const std::optional<std::string>& construction,
                    const std::string& theorem);

/// One structure read from text: JSON when it starts with '{', an edge list
/// when it starts with a digit or '#', graph6 otherwise.  An edge list with
/// one color and no loops is read as an undirected graph unless `directed`.
struct LoadedInput {
  std::optional<Graph> graph;
  std::optional<ColoredDigraph> digraph;
  std::optional<json> document;
};

LoadedInput load_input(std::string_view text, bool directed = false);

}  // namespace pautkit
