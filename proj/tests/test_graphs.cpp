#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pautkit/graphs.hpp"

using namespace pautkit;

namespace {

Graph gamma0() { return Graph::from_edges(4, {{0, 1}, {1, 2}}); }

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("induced subgraphs and complement of the running example") {
  const auto g = gamma0();
  CHECK(induced(g, 0b0111) == Graph::from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(induced(g, full_set(4)) == g);
  CHECK(induced(g, 0).order() == 0);
  CHECK(complement(g).edges() == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {2, 3}});
  CHECK(complement(complement(g)) == g);
  CHECK(complement(Graph::complete(5)).edge_count() == 0);
}

TEST_CASE("graph6 round trips") {
  CHECK(format_graph6(Graph(1)) == "@");
  CHECK(format_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<A_\n") == Graph::complete(2));
  for (int n = 0; n <= 5; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto text = format_graph6(g);
      CHECK(parse_graph6(text) == g);
      CHECK(format_graph6(parse_graph6(text)) == text);
    }
  Graph big(64);
  big.add_edge(0, 63);
  CHECK(parse_graph6(format_graph6(big)) == big);
}

TEST_CASE("graph6 errors are distinguished") {
  auto kind = [](std::string_view s) {
    try {
      parse_graph6(s);
    } catch (const FormatError& e) {
      return e.kind();
    }
    FAIL("no error");
    return FormatError::Kind::Syntax;
  };
  CHECK(kind("") == FormatError::Kind::Header);
  CHECK(kind("D?") == FormatError::Kind::Truncated);
  CHECK(kind("A_?") == FormatError::Kind::Trailing);
  CHECK(kind("A\x7f") == FormatError::Kind::ByteRange);
  CHECK(kind("A`") == FormatError::Kind::Padding);
}

TEST_CASE("edge lists") {
  const auto g = gamma0();
  CHECK(parse_edgelist_graph(format_edgelist(g)) == g);
  const auto d = parse_edgelist("3 2\n1 1 2\n2 2 3\n1 3 3\n");
  CHECK(d.color(0, 1) == 0);
  CHECK(d.color(1, 0) == ColoredDigraph::kNone);
  CHECK(d.color(2, 2) == 0);
  CHECK(parse_edgelist(format_edgelist(d)) == d);
  CHECK_THROWS_AS(parse_edgelist("3\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("3 1\n1 1 4\n"), FormatError);
  CHECK_THROWS_AS(parse_edgelist("3 2\n1 1 2\n2 1 2\n"), FormatError);
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  for (int n = 0; n <= 4; ++n) {
    const auto all = all_labeled_graphs(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto sigma = is_isomorphic(a, b);
        CHECK(sigma.has_value() == oracle::isomorphic(a, b));
        if (sigma) CHECK(relabel(a, *sigma) == b);
        CHECK((canonical_form(a) == canonical_form(b)) == sigma.has_value());
      }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (int n = 5; n <= 7; ++n)
    for (int t = 0; t < 200; ++t) {
      const auto g = oracle::random_graph(n, rng);
      const auto h = relabel(g, random_perm(n, rng));
      CHECK(canonical_key(g) == canonical_key(h));
      CHECK(is_isomorphic(g, h).has_value());
    }
  // Pairs at n = 5 against the oracle.
  const auto all = all_labeled_graphs(5);
  for (int t = 0; t < 300; ++t) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    CHECK((canonical_key(a) == canonical_key(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("isomorphism classes") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) CHECK(graph_classes(n).size() == expected[n]);
}

TEST_CASE("colored digraph isomorphism respects colors and directions") {
  const ColoredDigraph a(3, {{{0, 1}, {1, 2}, {2, 0}}});
  const ColoredDigraph b(3, {{{0, 2}, {2, 1}, {1, 0}}});
  const ColoredDigraph c(3, {{{0, 1}, {1, 2}, {0, 2}}});
  CHECK(is_isomorphic(a, b).has_value());
  CHECK_FALSE(is_isomorphic(a, c).has_value());
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK_FALSE(canonical_form(a) == canonical_form(c));
  const ColoredDigraph two(2, {{{0, 1}}, {{1, 0}}});
  const ColoredDigraph swapped(2, {{{1, 0}}, {{0, 1}}});
  CHECK(is_isomorphic(two, swapped).has_value());
}

TEST_CASE("vertex orbits") {
  CHECK(vertex_orbits(Graph::from_edges(3, {{0, 1}, {1, 2}})) == std::vector<int>{0, 1, 0});
  CHECK(vertex_orbits(Graph::complete(4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(vertex_orbits(gamma0()) == std::vector<int>{0, 1, 0, 3});
  CHECK(automorphisms(gamma0()).size() == 2);
}
