#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pautkit/characterize.hpp"

using namespace pautkit;

namespace {

const Graph kGamma0 = Graph::from_edges(4, {{0, 1}, {1, 2}});

InverseSubmonoid low_rank_i3() {
  std::vector<PartialPerm> e;
  for (const auto& f : all_partial_perms(3))
    if (f.rank() <= 2) e.push_back(f);
  e.push_back(PartialPerm::identity(3));
  return InverseSubmonoid(3, e);
}

InverseSubmonoid partial_identities(int n) {
  std::vector<PartialPerm> e;
  for (PointSet y = 0; y <= full_set(n); ++y) e.push_back(PartialPerm::partial_identity(n, y));
  return InverseSubmonoid(n, e);
}

bool iso_or_complement(const Graph& a, const Graph& b) {
  return oracle::isomorphic(a, b) || oracle::isomorphic(a, oracle::complement(b));
}

}  // namespace

TEST_CASE("fullness") {
  CHECK(check_full(enumerate_paut(kGamma0)).passed);
  CHECK(check_full(partial_identities(3)).passed);
  const InverseSubmonoid tiny(2, {PartialPerm::empty(2), PartialPerm::identity(2)});
  const auto v = check_full(tiny);
  CHECK_FALSE(v.passed);
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == PartialPerm::partial_identity(2, 0b01));
}

TEST_CASE("condition U") {
  const auto s = low_rank_i3();
  CHECK(s.validate().empty());
  const auto v = check_condition_U(s);
  CHECK_FALSE(v.passed);
  REQUIRE(v.witness.size() == 1);
  CHECK(v.witness[0] == parse_cpn("(1 2)|(3)", 3));
  // The witness is the join of {[2 1), [1 2), (3)}, each pairwise join in S.
  const std::vector<PartialPerm> a{parse_cpn("[2 1)", 3), parse_cpn("[1 2)", 3), parse_cpn("(3)", 3)};
  for (const auto& x : a)
    for (const auto& y : a) CHECK(s.contains(*join(x, y)));
  CHECK(*join_all(a, 3) == v.witness[0]);
  CHECK(check_condition_U_definitional(s).witness == v.witness);

  CHECK(check_condition_U(enumerate_paut(Graph::complete(4))).passed);
  for (int n = 0; n <= 4; ++n)
    for (const auto& g : graph_classes(n)) {
      const auto p = enumerate_paut(g);
      CHECK(check_condition_U(p).passed);
      CHECK(check_condition_U_definitional(p).passed);
    }
}

TEST_CASE("graph conditions") {
  CHECK(check_graph_conditions(enumerate_paut(Graph::complete(3))).passed());
  CHECK(build_graph(enumerate_paut(Graph::complete(3)), true) == Graph::complete(3));
  const auto g0 = enumerate_paut(kGamma0);
  const auto r = check_graph_conditions(g0, 3);
  CHECK(r.passed());
  CHECK(r.verdicts.size() == 4);
  const auto built = build_graph(g0, true);
  CHECK((built == kGamma0 || built == complement(kGamma0)));
  // D_e holds id_{1,2}, an edge of the running example.
  CHECK(built == kGamma0);

  const auto ids = partial_identities(2);
  const auto bad = check_graph_conditions(ids);
  CHECK_FALSE(bad.passed());
  CHECK(bad.find("full")->passed);
  CHECK(bad.find("condition-U")->passed);
  CHECK(bad.find("rank2-dclasses")->passed);
  const auto* h = bad.find("rank2-hclasses");
  CHECK_FALSE(h->passed);
  CHECK(h->witness == std::vector<PartialPerm>{PartialPerm::identity(2)});
  CHECK(bad.first_failure() == h);
  CHECK_THROWS_AS(build_graph(ids), ConditionsFailed);

  const auto trivial = check_graph_conditions(enumerate_paut(Graph(1)));
  CHECK(trivial.passed());
  CHECK(trivial.find("rank2-hclasses")->detail == "trivial case, theorem hypothesis not met");
  CHECK(build_graph(enumerate_paut(Graph(1))) == Graph(1));
  CHECK(build_graph(enumerate_paut(Graph(0))) == Graph(0));
}

TEST_CASE("round trip through the graph construction") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto s = enumerate_paut(g);
      const auto r = check_graph_conditions(s);
      CHECK(r.passed());
      const auto h = build_graph(s);
      CHECK((h == g || h == complement(g)));
    }
}

TEST_CASE("digraph construction") {
  const auto ids = partial_identities(2);
  CHECK(check_digraph_conditions(ids).passed());
  const auto d = build_colored_digraph(ids, true);
  CHECK(d.num_colors() == 3);
  CHECK(d.arcs(2) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(enumerate_paut(d) == ids);

  const auto i2 = enumerate_paut(Graph::complete(2));
  const auto d2 = build_colored_digraph(i2, true);
  CHECK(d2.num_colors() == 2);
  CHECK(d2.arcs(0) == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
  CHECK(d2.arcs(1) == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

  const ColoredDigraph cyc(3, {{{0, 1}, {1, 2}, {2, 0}}});
  const auto sc = enumerate_paut(cyc);
  CHECK(enumerate_paut(build_colored_digraph(sc)) == sc);
  const ColoredDigraph two(3, {{{0, 0}, {0, 1}}, {{1, 2}, {2, 2}}});
  const auto st = enumerate_paut(two);
  CHECK(enumerate_paut(build_colored_digraph(st)) == st);
}

TEST_CASE("abstract realization") {
  const auto i3 = InverseMonoid(to_table(enumerate_paut(Graph::complete(3))));
  const auto r = realize_abstract(i3, true);
  CHECK(r.theorem == "graph");
  REQUIRE(r.graph.has_value());
  CHECK(iso_or_complement(*r.graph, Graph::complete(3)));

  const InverseMonoid z({3, 0, {0, 1, 2, 1, 0, 2, 2, 2, 2}, {}});
  const auto rz = realize_abstract(z);
  CHECK(rz.theorem == "none");
  CHECK(rz.report.find("boolean")->passed);
  CHECK_FALSE(rz.report.find("fundamental")->passed);
  CHECK(rz.report.find("fundamental")->element_witness == std::vector<int>{0, 1});

  const auto rd = realize_abstract(InverseMonoid(to_table(partial_identities(2))));
  CHECK(rd.theorem == "digraph");
  REQUIRE(rd.digraph.has_value());
  CHECK(enumerate_paut(*rd.digraph).size() == 4);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto g = oracle::random_graph(4, rng);
    auto table = to_table(enumerate_paut(g));
    std::vector<int> perm(table.m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto out = realize_abstract(InverseMonoid(relabel_table(table, perm)), true);
    REQUIRE(out.graph.has_value());
    CHECK(iso_or_complement(*out.graph, g));
  }
}

TEST_CASE("PAut isomorphism of graphs") {
  const auto p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(paut_isomorphic(kGamma0, complement(kGamma0)));
  CHECK_FALSE(paut_isomorphic(Graph::complete(3), p3));
  const auto classes = graph_classes(3);
  for (const auto& a : classes)
    for (const auto& b : classes) {
      const auto ta = to_table(enumerate_paut(a)), tb = to_table(enumerate_paut(b));
      CHECK(paut_isomorphic(a, b) == oracle::table_isomorphic(ta.m, ta.table, tb.table, tb.m));
    }
}
