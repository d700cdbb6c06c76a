#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pautkit/green.hpp"

using namespace pautkit;

namespace {

const Graph kGamma0 = Graph::from_edges(4, {{0, 1}, {1, 2}});

std::set<std::string> class_of(const InverseSubmonoid& s, GreenRelation rel, const std::string& f) {
  std::set<std::string> out;
  const auto a = parse_cpn(f, s.degree());
  for (const auto& g : s)
    if (related(s, rel, a, g)) out.insert(format_cpn(g));
  return out;
}

std::set<std::string> names(std::initializer_list<const char*> list, int n) {
  std::set<std::string> out;
  for (auto* x : list) out.insert(format_cpn(parse_cpn(x, n)));
  return out;
}

}  // namespace

TEST_CASE("running example classes") {
  const auto s = enumerate_paut(kGamma0);
  CHECK(class_of(s, GreenRelation::R, "(1)|(2)") == names({"(1)|(2)", "(1 2)", "[1 2 3)", "(2)|[1 3)"}, 4));
  CHECK(class_of(s, GreenRelation::H, "(1)|(2)") == names({"(1)|(2)", "(1 2)"}, 4));
  CHECK_FALSE(related(s, GreenRelation::D, parse_cpn("(1 2)", 4), parse_cpn("(3 4)", 4)));
  CHECK(related(s, GreenRelation::D, parse_cpn("(1 3)", 4), parse_cpn("(3 4)", 4)));
  CHECK_THROWS_AS(related(s, GreenRelation::L, parse_cpn("(1 2)|(3 4)", 4), parse_cpn("()", 4)), std::invalid_argument);

  const auto gs = green_structure(s);
  std::vector<const DClass*> rank2;
  for (const auto& d : gs.dclasses)
    if (popcount(d.lkeys.front()) == 2) rank2.push_back(&d);
  REQUIRE(rank2.size() == 2);
  const auto* edge = rank2[0]->lkeys.front() == 0b0011 ? rank2[0] : rank2[1];
  CHECK(edge->rkeys.size() == 2);
  CHECK(edge->lkeys.size() == 2);
  CHECK(edge->h_class_size() == 2);
  CHECK(edge->size() == 8);
  CHECK(edge->lkeys == std::vector<std::uint64_t>{0b0011, 0b0110});
  std::size_t total = 0;
  for (const auto& d : gs.dclasses) total += d.size();
  CHECK(total == s.size());
  CHECK(gs.dclasses.size() == 8);
}

TEST_CASE("relations agree with the quantifier oracle") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto s = enumerate_paut(g);
      oracle::Green o;
      for (const auto& f : s) o.elems.push_back(oracle::to_map(f));
      const auto gs = green_structure(s);
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
          CHECK(related(s, GreenRelation::L, s[a], s[b]) == o.l_related(a, b));
          CHECK(related(s, GreenRelation::R, s[a], s[b]) == o.r_related(a, b));
          const bool d = o.d_related(a, b);
          CHECK(related(s, GreenRelation::D, s[a], s[b]) == d);
          CHECK((gs.dclass_of[a] == gs.dclass_of[b]) == d);
        }
    }
}

TEST_CASE("D-order agrees with its definition") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto s = enumerate_paut(g);
      const auto gs = green_structure(s);
      CHECK(dclass_order_definitional(s, gs) == gs.order);
    }
  // A non-full submonoid.
  const auto s = closure(4, {parse_cpn("[2 1)|(3)", 4), parse_cpn("(4 3)", 4)});
  const auto gs = green_structure(s);
  CHECK(dclass_order_definitional(s, gs) == gs.order);
}

TEST_CASE("heights in a full submonoid follow the rank") {
  const auto s = enumerate_paut(kGamma0);
  const auto gs = green_structure(s);
  for (const auto& f : s) {
    CHECK(height(s, gs, f) == f.rank());
    CHECK(natural_height(s, f) == f.rank());
  }
  CHECK(gs.dclasses.front().size() == 1);
  for (std::size_t c = 1; c < gs.dclasses.size(); ++c) CHECK(gs.below(0, c));
}

TEST_CASE("D-classes correspond to induced subgraphs") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& g : all_labeled_graphs(n)) {
      const auto s = enumerate_paut(g);
      auto gs = green_structure(s);
      const auto labels = dclass_subgraph_correspondence(g, s, gs);
      // Distinct classes carry distinct labels.
      std::set<std::string> uniq(labels.begin(), labels.end());
      CHECK(uniq.size() == labels.size());
    }
  const auto s = enumerate_paut(kGamma0);
  auto gs = green_structure(s);
  dclass_subgraph_correspondence(kGamma0, s, gs);
  for (const auto& d : gs.dclasses)
    if (d.lkeys.front() == 0b0011) CHECK(*d.label == canonical_key(Graph::complete(2)));
}

TEST_CASE("eggbox rendering") {
  const auto s = enumerate_paut(Graph::complete(2));
  const auto text = render_eggboxes(s, green_structure(s));
  CHECK(text.find("*(1)|(2), (2 1)") != std::string::npos);
  CHECK(text.find("D-class 2") != std::string::npos);
}
