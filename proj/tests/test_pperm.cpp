#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pautkit/pperm.hpp"

using namespace pautkit;

TEST_CASE("worked products and inverses") {
  const auto a = parse_cpn("[4 3 1)|(2)", 4);
  const auto b = parse_cpn("[4 1)|(3 2)", 4);
  const auto ab = compose(a, b);
  CHECK(format_cpn(ab) == "[4 2 3)");
  CHECK(ab(1) == 3);
  CHECK(ab(2) == 1);
  CHECK(ab.rank() == 2);

  const auto f = parse_cpn("(2 1)∨[5 4 3)", 5);
  CHECK(invert(f) == parse_cpn("(1 2)∨[3 4 5)", 5));
  CHECK(format_cpn(invert(f)) == "(2 1)|[3 4 5)");
}

TEST_CASE("notation round trip over I_4") {
  for (const auto& f : all_partial_perms(4)) {
    const auto text = format_cpn(f);
    CHECK(parse_cpn(text, 4) == f);
  }
  CHECK(format_cpn(PartialPerm::empty(3)) == "()");
  CHECK(parse_cpn("[2 2)", 3) == parse_cpn("(2)", 3));
}

TEST_CASE("malformed notation") {
  CHECK_THROWS_AS(parse_cpn("(1 2", 3), NotationError);
  CHECK_THROWS_AS(parse_cpn("(1 4)", 3), NotationError);
  CHECK_THROWS_AS(parse_cpn("(1 2)|(2 3)", 3), NotationError);
  CHECK_THROWS_AS(parse_cpn("[1 2]", 3), NotationError);
}

TEST_CASE("composition and inversion against the map oracle") {
  const auto all = all_partial_perms(3);
  REQUIRE(all.size() == 34);
  for (const auto& f : all) {
    CHECK(oracle::to_map(invert(f)) == oracle::invert(oracle::to_map(f)));
    for (const auto& g : all) CHECK(oracle::to_map(compose(g, f)) == oracle::compose(oracle::to_map(g), oracle::to_map(f)));
  }
}

TEST_CASE("inverse monoid identities") {
  const auto all = all_partial_perms(3);
  for (const auto& f : all) {
    CHECK(compose(compose(f, invert(f)), f) == f);
    CHECK(invert(invert(f)) == f);
    for (const auto& g : all) CHECK(invert(compose(g, f)) == compose(invert(f), invert(g)));
  }
}

TEST_CASE("order of I_n") {
  for (int n = 0; n <= 6; ++n) CHECK(symmetric_inverse_monoid_order(n) == oracle::symmetric_inverse_order(n));
  for (int n = 0; n <= 4; ++n) CHECK(all_partial_perms(n).size() == oracle::all_maps(n).size());
}

TEST_CASE("canonical order is strict and starts with the empty map") {
  const auto all = all_partial_perms(3);
  CHECK(all.front().is_empty());
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(CanonicalLess{}(all[i], all[i + 1]));
}

TEST_CASE("restriction order, compatibility and joins") {
  const auto f = parse_cpn("(2 1)|[5 4 3)", 5);
  CHECK(leq(parse_cpn("[5 4 3)", 5), f));
  CHECK(leq(f, f));
  CHECK_FALSE(leq(f, parse_cpn("[5 4 3)", 5)));
  CHECK(join(parse_cpn("(2 1)", 5), parse_cpn("[5 4 3)", 5)) == f);

  const auto all = all_partial_perms(3);
  for (const auto& a : all)
    for (const auto& b : all) {
      // Compatible iff both a b^-1 and a^-1 b are idempotent.
      const bool by_products = compose(a, invert(b)).is_idempotent() && compose(invert(a), b).is_idempotent();
      CHECK(compatible(a, b) == by_products);
      const auto j = join(a, b);
      CHECK(j.has_value() == by_products);
      if (j) {
        CHECK(leq(a, *j));
        CHECK(leq(b, *j));
        CHECK(j->rank() == popcount(a.dom() | b.dom()));
      }
    }
}

TEST_CASE("decomposition members rebuild the map") {
  for (const auto& f : all_partial_perms(4)) {
    const auto d = decompose(f);
    auto parts = d.as_pperms(4);
    CHECK(join_all(parts, 4) == f);
  }
  const auto d = decompose(parse_cpn("(2 1)|[5 4 3)", 5));
  REQUIRE(d.members.size() == 2);
  CHECK(d.cycles() == std::vector<std::vector<int>>{{0, 1}});
  CHECK(d.paths() == std::vector<std::vector<int>>{{2, 3, 4}});
}

TEST_CASE("ground set mismatch") {
  CHECK_THROWS_AS(compose(PartialPerm::identity(2), PartialPerm::identity(3)), GroundMismatch);
}
