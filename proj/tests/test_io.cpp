#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pautkit/io.hpp"

using namespace pautkit;

namespace {

const Graph kGamma0 = Graph::from_edges(4, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("monoid documents") {
  const auto s = enumerate_paut(kGamma0);
  const auto j = monoid_to_json(s);
  CHECK(j["n"] == 4);
  CHECK(j["elements"].size() == 75);
  CHECK(j["rank_counts"] == json::array({1, 16, 40, 16, 2}));
  CHECK(j["elements"][0]["dom"].empty());
  CHECK(j["elements"][1] == json({{"dom", {1}}, {"img", {1}}}));
  CHECK(monoid_from_json(j) == s);
  CHECK(monoid_from_json(json::parse(j.dump())) == s);

  const auto k = json::parse(R"j({"n": 3, "elements": ["(1)|(2)|(3)", "()", {"dom": [1], "img": [3]}]})j");
  const auto m = monoid_from_json(k);
  CHECK(m.size() == 3);
  CHECK(m.contains(parse_cpn("[3 1)", 3)));

  CHECK_THROWS_AS(monoid_from_json(json::parse(R"j({"elements": []})j")), JsonFormatError);
  CHECK_THROWS_AS(monoid_from_json(json::parse(R"j({"n": 2, "elements": [{"dom": [3], "img": [1]}]})j")), JsonFormatError);
  CHECK_THROWS_AS(monoid_from_json(json::parse(R"j({"n": 2, "elements": [{"dom": [1, 2], "img": [1]}]})j")), JsonFormatError);
}

TEST_CASE("table documents") {
  const auto t = to_table(enumerate_paut(Graph::complete(2)));
  const auto j = table_to_json(t);
  CHECK(j["m"] == 7);
  CHECK(j["names"][0] == "()");
  const auto back = table_from_json(j);
  CHECK(back.table == t.table);
  CHECK(back.identity == t.identity);
  CHECK(back.names == t.names);
  CHECK_THROWS_AS(table_from_json(json::parse(R"j({"m": 2, "identity": 0, "table": [[0, 1]]})j")), JsonFormatError);
  CHECK_THROWS_AS(table_from_json(json::parse(R"j({"m": 1, "identity": 0, "table": [["a"]]})j")), JsonFormatError);
}

TEST_CASE("eggbox documents") {
  const auto s = enumerate_paut(kGamma0);
  auto gs = green_structure(s);
  const auto j = eggbox_to_json(s, gs);
  CHECK(j["dclasses"].size() == 8);
  bool seen = false;
  for (const auto& d : j["dclasses"])
    if (d["lkeys"] == json::array({{1, 2}, {2, 3}})) {
      seen = true;
      CHECK(d["height"] == 2);
      CHECK(d["size"] == 8);
      CHECK(d["rkeys"] == d["lkeys"]);
      CHECK(d["cells"][0][0] == json::array({"(1)|(2)", "(2 1)"}));
    }
  CHECK(seen);
  CHECK(j["poset"].size() == gs.order.size());

  const auto a = eggbox_to_json(green_abs(InverseMonoid(to_table(s))));
  CHECK(a["dclasses"].size() == 8);
}

TEST_CASE("reports") {
  ConditionReport r;
  Verdict ok;
  ok.name = "full";
  Verdict bad;
  bad.name = "condition-U";
  bad.passed = false;
  bad.witness = {parse_cpn("(1 2)|(3)", 3)};
  r.verdicts = {ok, bad};
  const auto j = report_to_json(r, std::nullopt, "none");
  CHECK(j["conditions"]["full"]["passed"] == true);
  CHECK(j["conditions"]["condition-U"]["witness"][0] == "(2 1)|(3)");
  CHECK(j["construction"].is_null());
  CHECK(j["theorem"] == "none");
  CHECK(j.dump().find("\"conditions\"") < j.dump().find("\"theorem\""));
}

TEST_CASE("input dispatch") {
  const auto e = load_input("4 1\n1 1 2\n1 2 3\n");
  REQUIRE(e.graph.has_value());
  CHECK(*e.graph == kGamma0);
  CHECK(enumerate_paut(*e.digraph).rank_counts() == std::vector<std::size_t>{1, 16, 40, 16, 2});

  const auto d = load_input("4 1\n1 1 2\n1 2 3\n", true);
  CHECK_FALSE(d.graph.has_value());
  CHECK(d.digraph->color(1, 0) == ColoredDigraph::kNone);

  const auto g = load_input("  Cr\n");
  REQUIRE(g.graph.has_value());
  CHECK(format_graph6(*g.graph) == "Cr");

  const auto doc = load_input(R"j({"n": 1, "elements": ["()", "(1)"]})j");
  CHECK(doc.document.has_value());

  const auto loops = load_input("2 1\n1 1 1\n1 1 2\n");
  CHECK_FALSE(loops.graph.has_value());

  CHECK_THROWS_AS(load_input("   "), FormatError);
  CHECK_THROWS_AS(load_input("{oops"), JsonFormatError);
}
