#include "pautkit/io.hpp"

#include <cctype>

namespace pautkit {

namespace {

json point_set(std::uint64_t s) {
  json out = json::array();
  for (int p : points_of(s)) out.push_back(p + 1);
  return out;
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw JsonFormatError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw JsonFormatError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw JsonFormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json monoid_to_json(const InverseSubmonoid& s) {
  json elements = json::array();
  for (const auto& f : s) {
    json dom = json::array(), img = json::array();
    for (auto [x, y] : f.pairs()) {
      dom.push_back(x + 1);
      img.push_back(y + 1);
    }
    elements.push_back({{"dom", dom}, {"img", img}});
  }
  return {{"n", s.degree()}, {"elements", elements}, {"rank_counts", s.rank_counts()}};
}

InverseSubmonoid monoid_from_json(const json& j) {
  const auto& nj = field(j, "n");
  if (!nj.is_number_integer()) throw JsonFormatError("\"n\" must be an integer");
  const int n = nj.get<int>();
  if (n < 0 || n > kMaxPoints) throw JsonFormatError("\"n\" out of range");
  const auto& list = field(j, "elements");
  if (!list.is_array()) throw JsonFormatError("\"elements\" must be an array");
  std::vector<PartialPerm> out;
  for (const auto& e : list) {
    if (e.is_string()) {
      out.push_back(parse_cpn(e.get<std::string>(), n));
      continue;
    }
    auto dom = int_list(field(e, "dom"), "dom");
    auto img = int_list(field(e, "img"), "img");
    if (dom.size() != img.size()) throw JsonFormatError("dom and img differ in length");
    for (auto* v : {&dom, &img})
      for (int& p : *v) {
        if (p < 1 || p > n) throw JsonFormatError("point " + std::to_string(p) + " out of range");
        --p;
      }
    out.emplace_back(n, dom, img);
  }
  return InverseSubmonoid(n, std::move(out));
}

json table_to_json(const MulTable& t) {
  json rows = json::array();
  for (int a = 0; a < t.m; ++a) {
    json row = json::array();
    for (int b = 0; b < t.m; ++b) row.push_back(t.mul(a, b));
    rows.push_back(std::move(row));
  }
  json out = {{"m", t.m}, {"identity", t.identity}, {"table", rows}};
  if (!t.names.empty()) out["names"] = t.names;
  return out;
}

MulTable table_from_json(const json& j) {
  MulTable t;
  const auto& mj = field(j, "m");
  const auto& ij = field(j, "identity");
  if (!mj.is_number_integer() || !ij.is_number_integer()) throw JsonFormatError("\"m\" and \"identity\" must be integers");
  t.m = mj.get<int>();
  t.identity = ij.get<int>();
  if (t.m < 1) throw JsonFormatError("\"m\" must be positive");
  const auto& rows = field(j, "table");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(t.m))
    throw JsonFormatError("\"table\" must have m rows");
  for (const auto& row : rows) {
    auto r = int_list(row, "table row");
    if (r.size() != static_cast<std::size_t>(t.m)) throw JsonFormatError("every table row must have m entries");
    t.table.insert(t.table.end(), r.begin(), r.end());
  }
  if (j.contains("names")) {
    const auto& names = j.at("names");
    if (!names.is_array()) throw JsonFormatError("\"names\" must be an array");
    for (const auto& x : names) {
      if (!x.is_string()) throw JsonFormatError("\"names\" must hold strings");
      t.names.push_back(x.get<std::string>());
    }
  }
  return t;
}

namespace {

template <typename Key, typename Cell>
json eggboxes(const GreenStructure& gs, Key&& key, Cell&& cell) {
  json classes = json::array();
  for (const auto& d : gs.dclasses) {
    json rk = json::array(), lk = json::array(), cells = json::array();
    for (auto k : d.rkeys) rk.push_back(key(k));
    for (auto k : d.lkeys) lk.push_back(key(k));
    for (const auto& row : d.cells) {
      json r = json::array();
      for (const auto& c : row) {
        json h = json::array();
        for (auto i : c) h.push_back(cell(i));
        r.push_back(std::move(h));
      }
      cells.push_back(std::move(r));
    }
    json entry = {{"height", d.height}, {"size", d.size()}, {"rkeys", rk}, {"lkeys", lk}, {"cells", cells}};
    entry["label"] = d.label ? json(*d.label) : json(nullptr);
    classes.push_back(std::move(entry));
  }
  json poset = json::array();
  for (auto [a, b] : gs.order) poset.push_back({a, b});
  return {{"dclasses", classes}, {"poset", poset}};
}

}  // namespace

json eggbox_to_json(const InverseSubmonoid& s, const GreenStructure& gs) {
  return eggboxes(
      gs, [](std::uint64_t k) { return point_set(k); }, [&](std::size_t i) { return json(format_cpn(s[i])); });
}

json eggbox_to_json(const GreenStructure& gs) {
  return eggboxes(
      gs, [](std::uint64_t k) { return json(k); }, [](std::size_t i) { return json(i); });
}

json verdict_to_json(const Verdict& v) {
  json out = {{"passed", v.passed}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (!v.witness.empty()) {
    json w = json::array();
    for (const auto& f : v.witness) w.push_back(format_cpn(f));
    out["witness"] = w;
  }
  if (!v.element_witness.empty()) out["element_witness"] = v.element_witness;
  return out;
}

json report_to_json(const ConditionReport& r, const std::optional<std::string>& construction,
                    const std::string& theorem) {
  json conds = json::object();
  for (const auto& v : r.verdicts) conds[v.name] = verdict_to_json(v);
  return {{"conditions", conds},
          {"construction", construction ? json(*construction) : json(nullptr)},
          {"theorem", theorem}};
}

LoadedInput load_input(std::string_view text, bool directed) {
  LoadedInput in;
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw FormatError(FormatError::Kind::Syntax, "empty input");
  if (text[i] == '{') {
    try {
      in.document = json::parse(text);
    } catch (const json::parse_error& e) {
      throw JsonFormatError(std::string("invalid JSON: ") + e.what());
    }
  } else if (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '#') {
    in.digraph = parse_edgelist(text);
    bool loops = false;
    for (int v = 0; v < in.digraph->order(); ++v) loops = loops || in.digraph->color(v, v) != ColoredDigraph::kNone;
    if (!directed && in.digraph->num_colors() <= 1 && !loops) {
      in.graph = parse_edgelist_graph(text);
      in.digraph = ColoredDigraph::from_graph(*in.graph);
    }
  } else {
    auto line = text.substr(i);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    in.graph = parse_graph6(line);
    in.digraph = ColoredDigraph::from_graph(*in.graph);
  }
  return in;
}

}  // namespace pautkit
