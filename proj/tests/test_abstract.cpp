#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pautkit/abstract.hpp"

using namespace pautkit;

namespace {

const Graph kGamma0 = Graph::from_edges(4, {{0, 1}, {1, 2}});

MulTable z2() { return {2, 0, {0, 1, 1, 0}, {}}; }
MulTable z2_with_zero() { return {3, 0, {0, 1, 2, 1, 0, 2, 2, 2, 2}, {}}; }

InverseMonoid table_of(const InverseSubmonoid& s) { return InverseMonoid(to_table(s)); }

int index_in(const InverseSubmonoid& s, const char* cpn) {
  return static_cast<int>(*s.index_of(parse_cpn(cpn, s.degree())));
}

std::vector<InverseSubmonoid> small_pauts(int max_n) {
  std::vector<InverseSubmonoid> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& g : graph_classes(n)) out.push_back(enumerate_paut(g));
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(to_table(enumerate_paut(Graph::complete(2)))).ok);
  CHECK(to_table(enumerate_paut(Graph::complete(2))).m == 7);

  // x y = 1 - y
  const MulTable bad{2, 0, {1, 0, 1, 0}, {}};
  const auto r = validate(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.axiom == "associativity");
  CHECK(r.witness == std::vector<int>{0, 0, 0});

  // Full transformation monoid on two points: id, const 0, const 1, swap.
  const MulTable t2{4, 0, {0, 1, 2, 3, 1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 1, 0}, {}};
  const auto r2 = validate(t2);
  CHECK(r2.axiom == "inverse-uniqueness");
  CHECK(r2.witness == std::vector<int>{1, 1, 2});

  const MulTable no_id{2, 1, {0, 0, 0, 0}, {}};
  CHECK(validate(no_id).axiom == "identity");
  CHECK(validate(MulTable{2, 0, {0, 1, 1}, {}}).axiom == "shape");
  CHECK_THROWS_AS(InverseMonoid{t2}, InvalidTable);
  CHECK(validate(to_table(enumerate_paut(kGamma0)), 4).ok);
}

TEST_CASE("inverses and idempotents") {
  for (const auto& s : small_pauts(3)) {
    const auto t = table_of(s);
    for (int a = 0; a < t.size(); ++a) {
      CHECK(t.inverse(t.inverse(a)) == a);
      CHECK(t.is_idempotent(a) == s[a].is_idempotent());
      for (int b = 0; b < t.size(); ++b) CHECK(t.inverse(t.mul(a, b)) == t.mul(t.inverse(b), t.inverse(a)));
    }
    REQUIRE(t.zero().has_value());
    CHECK(s[*t.zero()].is_empty());
  }
  CHECK_FALSE(InverseMonoid(z2()).zero().has_value());
}

TEST_CASE("natural order, compatibility and joins agree with I_X") {
  auto cases = small_pauts(3);
  cases.push_back(enumerate_paut(kGamma0));
  cases.push_back(closure(3, {parse_cpn("[2 1)|(3)", 3), parse_cpn("(1)|(2)", 3)}));
  for (const auto& s : cases) {
    const auto t = table_of(s);
    const int m = t.size();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        CHECK(natural_leq(t, a, b) == leq(s[a], s[b]));
        CHECK(compatible_abs(t, a, b) == compatible(s[a], s[b]));
        // Least upper bound inside S by brute force.
        std::vector<int> ub;
        for (int c = 0; c < m; ++c)
          if (leq(s[a], s[c]) && leq(s[b], s[c])) ub.push_back(c);
        std::optional<int> lub;
        for (int u : ub)
          if (std::all_of(ub.begin(), ub.end(), [&](int c) { return leq(s[u], s[c]); })) lub = u;
        CHECK(join_abs(t, a, b) == lub);
      }
  }
}

TEST_CASE("running example in the table") {
  const auto s = enumerate_paut(kGamma0);
  const auto t = table_of(s);
  const int a = index_in(s, "[1 2)");
  const int b = index_in(s, "[4 3)");
  CHECK(compatible_abs(t, a, b));
  CHECK_FALSE(join_abs(t, a, b).has_value());
  CHECK(join_abs(t, a, a) == a);
  CHECK(natural_leq(t, index_in(s, "[1 2)"), index_in(s, "[1 2 3)")));
  for (int e : t.idempotents()) CHECK(natural_leq(t, e, t.identity()));
}

TEST_CASE("Boolean idempotent lattices") {
  const auto i3 = table_of(enumerate_paut(Graph::complete(3)));
  CHECK(is_boolean(i3));
  CHECK(idempotent_lattice(i3).atoms.size() == 3);
  const auto g0 = table_of(enumerate_paut(kGamma0));
  CHECK(is_boolean(g0));
  CHECK(idempotent_lattice(g0).atoms.size() == 4);
  CHECK_FALSE(is_boolean(InverseMonoid(z2())));
  // 1 > e > 0
  const MulTable chain{3, 0, {0, 1, 2, 1, 1, 2, 2, 2, 2}, {}};
  CHECK_FALSE(is_boolean(InverseMonoid(chain)));
  for (const auto& s : small_pauts(4)) {
    const auto t = table_of(s);
    CHECK(is_boolean(t));
    const auto lat = idempotent_lattice(t);
    CHECK(lat.idempotents.size() == (std::size_t{1} << lat.atoms.size()));
  }
}

TEST_CASE("Munn representation") {
  const auto s = enumerate_paut(kGamma0);
  const auto t = table_of(s);
  for (int e : t.idempotents())
    for (auto [f, img] : munn(t, e)) CHECK(f == img);
  for (int a = 0; a < t.size(); ++a)
    for (auto [e, img] : munn(t, a)) {
      CHECK(s[e].dom() == (s[e].dom() & s[a].dom()));
      CHECK(s[img] == PartialPerm::partial_identity(4, restrict(s[a], s[e].dom()).ran()));
    }

  for (const auto& src : {s, enumerate_paut(Graph::complete(3)), enumerate_paut(Graph::complete(4))}) {
    const auto tt = table_of(src);
    const auto rm = restricted_munn(tt);
    REQUIRE(static_cast<int>(rm.atoms.size()) == src.degree());
    for (int v = 0; v < src.degree(); ++v) CHECK(src[rm.atoms[v]] == PartialPerm::partial_identity(src.degree(), PointSet{1} << v));
    CHECK(rm.images[tt.identity()] == PartialPerm::identity(src.degree()));
    for (int a = 0; a < tt.size(); ++a) {
      CHECK(rm.images[a] == src[a]);
      for (int b = 0; b < tt.size(); ++b) CHECK(rm.images[tt.mul(a, b)] == compose(rm.images[a], rm.images[b]));
    }
  }
  CHECK_THROWS_AS(restricted_munn(InverseMonoid(z2())), NoZeroElement);
}

TEST_CASE("fundamental monoids") {
  CHECK(is_fundamental(table_of(enumerate_paut(Graph::complete(3)))));
  CHECK(is_fundamental(table_of(enumerate_paut(kGamma0))));
  const InverseMonoid z(z2_with_zero());
  CHECK_FALSE(is_fundamental(z));
  CHECK(fundamental_witness(z) == std::pair<int, int>{0, 1});
}

TEST_CASE("Green's relations from the table") {
  for (const auto& s : {enumerate_paut(kGamma0), enumerate_paut(Graph::complete(3)), enumerate_paut(Graph(3))}) {
    const auto t = table_of(s);
    const auto a = green_abs(t);
    const auto c = green_structure(s);
    REQUIRE(a.dclasses.size() == c.dclasses.size());
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = 0; y < s.size(); ++y)
        CHECK((a.dclass_of[x] == a.dclass_of[y]) == (c.dclass_of[x] == c.dclass_of[y]));
    for (std::size_t x = 0; x < s.size(); ++x) {
      const auto& da = a.dclasses[a.dclass_of[x]];
      const auto& dc = c.dclasses[c.dclass_of[x]];
      CHECK(da.height == dc.height);
      CHECK(da.rkeys.size() == dc.rkeys.size());
      CHECK(da.h_class_size() == dc.h_class_size());
    }
    for (auto [p, q] : c.order) {
      const auto pa = a.dclass_of[c.dclasses[p].cells[0][0][0]];
      const auto qa = a.dclass_of[c.dclasses[q].cells[0][0][0]];
      CHECK(a.below(pa, qa));
    }
    CHECK(a.order.size() == c.order.size());
  }
  const auto g = green_abs(InverseMonoid(z2()));
  CHECK(g.dclasses.size() == 1);
  const InverseMonoid z(z2_with_zero());
  const auto gz = green_abs(z);
  REQUIRE(gz.dclasses.size() == 2);
  const auto zc = gz.dclass_of[*z.zero()];
  CHECK(gz.dclasses[zc].size() == 1);
  CHECK(gz.below(zc, 1 - zc));
}

TEST_CASE("table isomorphism") {
  std::mt19937_64 rng(11);
  for (const auto& s : small_pauts(3)) {
    const auto t = to_table(s);
    std::vector<int> perm(t.m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const InverseMonoid a(t), b(relabel_table(t, perm));
    const auto phi = monoid_isomorphism(a, b);
    REQUIRE(phi.has_value());
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y) CHECK((*phi)[a.mul(x, y)] == b.mul((*phi)[x], (*phi)[y]));
  }
  const auto classes = small_pauts(3);
  for (const auto& x : classes)
    for (const auto& y : classes) {
      const auto tx = to_table(x), ty = to_table(y);
      CHECK(monoid_isomorphism(InverseMonoid(tx), InverseMonoid(ty)).has_value() ==
            oracle::table_isomorphic(tx.m, tx.table, ty.table, ty.m));
    }
}
