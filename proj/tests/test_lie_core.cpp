#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solvlie/error.hpp"
#include "solvlie/lie.hpp"
#include "test_util.hpp"

using namespace solvlie;
using namespace solvlie::testutil;

namespace {
const FieldDescriptor GF2 = FieldDescriptor::gf(2);
const FieldDescriptor GF3 = FieldDescriptor::gf(3);
const FieldDescriptor QQ = FieldDescriptor::rationals();
}  // namespace

TEST_CASE("build accepts the standard small algebras") {
  CHECK_NOTHROW(dim2_nonabelian(QQ));
  CHECK_NOTHROW(heisenberg(QQ));
  CHECK_NOTHROW(cross_product(QQ));
  CHECK_NOTHROW(almost_abelian(GF3));
  CHECK_NOTHROW(cyclic_weight_algebra(2));
  CHECK_NOTHROW(cyclic_weight_algebra(3));
  CHECK_NOTHROW(cyclic_weight_algebra(5));
}

TEST_CASE("build rejects Jacobi violations with a witness triple") {
  // [x,y]=x, [x,z]=z makes [[x,y],z] = z while the other two terms vanish
  try {
    LieAlgebra bad(QQ, 3, {"x", "y", "z"},
                   {{0, 1, vec_of(QQ, {1, 0, 0})}, {0, 2, vec_of(QQ, {0, 0, 1})}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "jacobi_violation");
    CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
  }
}

TEST_CASE("build rejects malformed tables") {
  CHECK_THROWS_AS(LieAlgebra(QQ, 2, {"x", "y"}, {{1, 0, vec_of(QQ, {1, 0})}}),
                  Error);  // i >= j
  CHECK_THROWS_AS(LieAlgebra(QQ, 2, {"x", "y"}, {{0, 5, vec_of(QQ, {1, 0})}}),
                  Error);  // out of range
  CHECK_THROWS_AS(LieAlgebra(QQ, 2, {"x", "y"}, {{0, 1, vec_of(QQ, {1})}}),
                  Error);  // short value
  CHECK_THROWS_AS(LieAlgebra(QQ, 2, {"x", "y"},
                             {{0, 1, vec_of(QQ, {1, 0})},
                              {0, 1, vec_of(QQ, {0, 1})}}),
                  Error);  // duplicate pair
  CHECK_THROWS_AS(LieAlgebra(QQ, 2, {"only_one"}, {}), Error);  // name count
}

TEST_CASE("bracket expands the table bilinearly and antisymmetrically") {
  LieAlgebra h = heisenberg(QQ);
  CHECK(h.bracket(vec_of(QQ, {1, 0, 0}), vec_of(QQ, {0, 1, 0})) ==
        vec_of(QQ, {0, 0, 1}));
  LieAlgebra d2 = dim2_nonabelian(QQ);
  CHECK(d2.bracket(vec_of(QQ, {0, 1}), vec_of(QQ, {1, 0})) ==
        vec_of(QQ, {-1, 0}));

  Lcg rng(7);
  for (int t = 0; t < 50; ++t) {
    Vec u = vec_of(GF3, {rng.below(3), rng.below(3), rng.below(3)});
    Vec v = vec_of(GF3, {rng.below(3), rng.below(3), rng.below(3)});
    Vec w = vec_of(GF3, {rng.below(3), rng.below(3), rng.below(3)});
    LieAlgebra a = almost_abelian(GF3);
    CHECK(vec_is_zero(a.bracket(u, u)));
    CHECK(a.bracket(u, v) == vec_neg(a.bracket(v, u)));
    CHECK(a.bracket(vec_add(u, w), v) ==
          vec_add(a.bracket(u, v), a.bracket(w, v)));
  }
}

TEST_CASE("ad matrix columns hold the right-bracket images of basis vectors") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  Matrix ad_y = d2.ad_matrix(vec_of(QQ, {0, 1}));
  // column 0 = [x, y] = x, column 1 = [y, y] = 0
  CHECK(ad_y.col(0) == vec_of(QQ, {1, 0}));
  CHECK(vec_is_zero(ad_y.col(1)));
  // matrix action matches the bracket on arbitrary vectors
  Vec v = vec_of(QQ, {3, 5});
  CHECK(ad_y.apply(v) == d2.bracket(v, vec_of(QQ, {0, 1})));
}

TEST_CASE("product_space spans all pairwise brackets") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  CHECK(product_space(d2, d2.full_space(), d2.full_space()) ==
        span_of(QQ, 2, {{1, 0}}));
  CHECK(product_space(d2, d2.zero_space(), d2.full_space()).is_zero());
  LieAlgebra h = heisenberg(QQ);
  CHECK(product_space(h, h.full_space(), h.full_space()) ==
        span_of(QQ, 3, {{0, 0, 1}}));
}

TEST_CASE("derived series and solvability") {
  LieAlgebra ab = abelian(QQ, 3);
  auto s_ab = derived_series(ab);
  REQUIRE(s_ab.size() == 2);
  CHECK(s_ab[0].is_full());
  CHECK(s_ab[1].is_zero());
  CHECK(is_solvable(ab));

  LieAlgebra d2 = dim2_nonabelian(QQ);
  auto s_d2 = derived_series(d2);
  REQUIRE(s_d2.size() == 3);
  CHECK(s_d2[1] == span_of(QQ, 2, {{1, 0}}));
  CHECK(s_d2[2].is_zero());
  CHECK(is_solvable(d2));

  LieAlgebra cp = cross_product(QQ);
  auto s_cp = derived_series(cp);
  CHECK(s_cp.back().is_full());
  CHECK(!is_solvable(cp));
  CHECK(is_solvable(cyclic_weight_algebra(3)));
}

TEST_CASE("lower central series and nilpotency class") {
  LieAlgebra h = heisenberg(QQ);
  auto cls = nilpotency_class(h, h.full_space());
  REQUIRE(cls.has_value());
  CHECK(*cls == 2);  // L² = span(z), L³ = 0

  LieAlgebra ab = abelian(QQ, 2);
  CHECK(nilpotency_class(ab, ab.full_space()) == 1);
  CHECK(nilpotency_class(h, h.zero_space()) == 0);

  // the cyclic-weight algebra: L² = A + span(x) is not nilpotent
  LieAlgebra cw = cyclic_weight_algebra(2);
  Subspace l2 = product_space(cw, cw.full_space(), cw.full_space());
  CHECK(l2 == span_of(GF2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  CHECK(!nilpotency_class(cw, l2).has_value());

  LieAlgebra d2 = dim2_nonabelian(QQ);
  CHECK_THROWS_AS(lower_central_series(d2, span_of(QQ, 2, {{0, 1}})), Error);
}

TEST_CASE("centralizer solves the joint bracket kernel") {
  LieAlgebra h = heisenberg(QQ);
  CHECK(centralizer(h, h.zero_space()) == h.full_space());
  CHECK(centralizer(h, span_of(QQ, 3, {{1, 0, 0}})) ==
        span_of(QQ, 3, {{1, 0, 0}, {0, 0, 1}}));
  LieAlgebra aa = almost_abelian(QQ);
  CHECK(centralizer(aa, span_of(QQ, 3, {{1, 0, 0}})) ==
        span_of(QQ, 3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("ideal and subalgebra predicates") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  CHECK(is_ideal(d2, d2.zero_space()));
  CHECK(is_ideal(d2, d2.full_space()));
  CHECK(is_ideal(d2, span_of(QQ, 2, {{1, 0}})));
  CHECK(is_subalgebra(d2, span_of(QQ, 2, {{0, 1}})));
  CHECK(!is_ideal(d2, span_of(QQ, 2, {{0, 1}})));

  // Heisenberg over GF(2): bracket-closed ⊇ span(z) forces ideal
  LieAlgebra h = heisenberg(GF2);
  Vec z = vec_of(GF2, {0, 0, 1});
  for (const auto& u : enumerate_subspaces(3, GF2)) {
    if (u.contains(z) && is_subalgebra(h, u)) CHECK(is_ideal(h, u));
  }
}

TEST_CASE("core: the largest ideal inside a subalgebra") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  Subspace ideal = span_of(QQ, 2, {{1, 0}});
  CHECK(core(d2, ideal) == ideal);
  CHECK(core(d2, span_of(QQ, 2, {{0, 1}})).is_zero());

  LieAlgebra aa = almost_abelian(QQ);
  CHECK(core(aa, span_of(QQ, 3, {{1, 0, 0}, {0, 0, 1}})) ==
        span_of(QQ, 3, {{1, 0, 0}}));

  LieAlgebra h = heisenberg(QQ);
  CHECK_THROWS_AS(core(h, span_of(QQ, 3, {{1, 0, 0}, {0, 1, 0}})), Error);
}

TEST_CASE("core properties hold exhaustively over small fields") {
  for (auto make : {almost_abelian, heisenberg}) {
    for (auto f : {GF2, GF3}) {
      LieAlgebra L = make(f);
      auto all = enumerate_subspaces(L.dim(), f);
      std::vector<Subspace> ideals;
      for (const auto& u : all)
        if (is_ideal(L, u)) ideals.push_back(u);
      for (const auto& u : all) {
        if (!is_subalgebra(L, u)) continue;
        Subspace c = core(L, u);
        CHECK(is_ideal(L, c));
        CHECK(u.contains(c));
        for (const auto& i : ideals)
          if (u.contains(i)) CHECK(c.contains(i));
      }
    }
  }
}

TEST_CASE("ideal closure grows until ad-stable") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  CHECK(ideal_closure(d2, vec_of(QQ, {0, 0})).is_zero());
  CHECK(ideal_closure(d2, vec_of(QQ, {1, 0})) == span_of(QQ, 2, {{1, 0}}));
  CHECK(ideal_closure(d2, vec_of(QQ, {0, 1})).is_full());
}

TEST_CASE("subalgebra closure") {
  LieAlgebra h = heisenberg(QQ);
  // x and y bracket to z: closure of the xy-plane is everything
  CHECK(subalgebra_closure(h, span_of(QQ, 3, {{1, 0, 0}, {0, 1, 0}})).is_full());
  Subspace line = span_of(QQ, 3, {{1, 0, 0}});
  CHECK(subalgebra_closure(h, line) == line);
}

TEST_CASE("quotient by zero relabels nothing") {
  LieAlgebra h = heisenberg(QQ);
  QuotientMap q(h, h.zero_space());
  CHECK(q.algebra().dim() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(q.algebra().structure_constant(i, j) == h.structure_constant(i, j));
}

TEST_CASE("quotients collapse the ideal") {
  LieAlgebra d2 = dim2_nonabelian(QQ);
  QuotientMap q1(d2, span_of(QQ, 2, {{1, 0}}));
  CHECK(q1.algebra().dim() == 1);
  CHECK(vec_is_zero(q1.algebra().structure_constant(0, 0)));

  LieAlgebra h = heisenberg(QQ);
  QuotientMap q2(h, span_of(QQ, 3, {{0, 0, 1}}));
  CHECK(q2.algebra().dim() == 2);
  CHECK(vec_is_zero(q2.algebra().structure_constant(0, 1)));  // abelian

  CHECK_THROWS_AS(QuotientMap(d2, span_of(QQ, 2, {{0, 1}})), Error);
}

TEST_CASE("quotient projection is a homomorphism and round-trips") {
  LieAlgebra h = heisenberg(GF3);
  Subspace ideal = span_of(GF3, 3, {{0, 0, 1}});
  QuotientMap q(h, ideal);
  Lcg rng(21);
  for (int t = 0; t < 100; ++t) {
    Vec u = vec_of(GF3, {rng.below(3), rng.below(3), rng.below(3)});
    Vec v = vec_of(GF3, {rng.below(3), rng.below(3), rng.below(3)});
    CHECK(q.project(h.bracket(u, v)) ==
          q.algebra().bracket(q.project(u), q.project(v)));
  }
  CHECK(q.project(q.section(vec_of(GF3, {1, 2}))) == vec_of(GF3, {1, 2}));
  for (const auto& u : enumerate_subspaces(3, GF3)) {
    CHECK(q.pull(q.push(u)) == subspace_sum(u, ideal));
  }
}

TEST_CASE("minimal ideals over prime fields") {
  LieAlgebra d2 = dim2_nonabelian(GF3);
  auto m1 = minimal_ideals(d2);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0] == span_of(GF3, 2, {{1, 0}}));

  auto m2 = minimal_ideals(abelian(GF2, 2));
  CHECK(m2.size() == 3);  // every line of the abelian plane

  auto m3 = minimal_ideals(almost_abelian(GF3));
  REQUIRE(m3.size() == 4);
  for (const auto& a : m3) {
    CHECK(a.dim() == 1);
    CHECK(span_of(GF3, 3, {{1, 0, 0}, {0, 1, 0}}).contains(a));
    CHECK(product_space(almost_abelian(GF3), a, a).is_zero());  // abelian
  }
  CHECK_THROWS_AS(minimal_ideals(dim2_nonabelian(QQ)), Error);
}

TEST_CASE("chief series climbs through lex-least minimal ideals") {
  LieAlgebra d2 = dim2_nonabelian(GF3);
  ChiefSeries s = chief_series(d2);
  REQUIRE(s.terms.size() == 3);
  CHECK(s.terms[0].is_zero());
  CHECK(s.terms[1] == span_of(GF3, 2, {{1, 0}}));
  CHECK(s.terms[2].is_full());

  LieAlgebra h = heisenberg(GF2);
  ChiefSeries sh = chief_series(h);
  REQUIRE(sh.terms.size() == 4);
  CHECK(sh.terms[1] == span_of(GF2, 3, {{0, 0, 1}}));
  CHECK(sh.terms[2] == span_of(GF2, 3, {{0, 1, 0}, {0, 0, 1}}));
  for (const auto& t : sh.terms) CHECK(is_ideal(h, t));
  // chief factors of a solvable algebra are abelian
  for (std::size_t k = 0; k + 1 < sh.terms.size(); ++k)
    CHECK(sh.terms[k].contains(
        product_space(h, sh.terms[k + 1], sh.terms[k + 1])));

  ChiefSeries s1 = chief_series(abelian(GF2, 1));
  REQUIRE(s1.terms.size() == 2);

  CHECK_THROWS_AS(chief_series(cross_product(FieldDescriptor::gf(5))), Error);
  CHECK_THROWS_AS(chief_series(dim2_nonabelian(QQ)), Error);
}

TEST_CASE("maximal subalgebras by exhaustive enumeration") {
  auto m1 = maximal_subalgebras(dim2_nonabelian(GF2));
  CHECK(m1.size() == 3);  // all three lines
  for (const auto& m : m1) CHECK(m.dim() == 1);

  auto m2 = maximal_subalgebras(heisenberg(GF2));
  REQUIRE(m2.size() == 3);
  Vec z = vec_of(GF2, {0, 0, 1});
  for (const auto& m : m2) {
    CHECK(m.dim() == 2);
    CHECK(m.contains(z));
  }

  auto m3 = maximal_subalgebras(abelian(GF2, 1));
  REQUIRE(m3.size() == 1);
  CHECK(m3[0].is_zero());
}

TEST_CASE("maximality check: exact on prime fields, codim-1 everywhere") {
  LieAlgebra h2 = heisenberg(GF2);
  for (const auto& m : maximal_subalgebras(h2))
    CHECK(maximality_check(h2, m) == Maximality::maximal);
  // a line inside a closed plane is not maximal
  CHECK(maximality_check(h2, span_of(GF2, 3, {{0, 1, 0}})) ==
        Maximality::not_maximal);
  // the full space and non-closed subspaces are never maximal
  CHECK(maximality_check(h2, h2.full_space()) == Maximality::not_maximal);
  CHECK(maximality_check(h2, span_of(GF2, 3, {{1, 0, 0}, {0, 1, 0}})) ==
        Maximality::not_maximal);

  LieAlgebra d2q = dim2_nonabelian(QQ);
  CHECK(maximality_check(d2q, span_of(QQ, 2, {{1, 0}})) ==
        Maximality::maximal);  // codim 1 over ℚ
  LieAlgebra hq = heisenberg(QQ);
  CHECK(maximality_check(hq, span_of(QQ, 3, {{0, 0, 1}})) ==
        Maximality::unverified);  // codim 2 over ℚ
}

TEST_CASE("maximality agrees with the exhaustive enumeration") {
  for (auto f : {GF2, GF3}) {
    LieAlgebra L = almost_abelian(f);
    auto maxes = maximal_subalgebras(L);
    for (const auto& u : enumerate_subspaces(3, f)) {
      bool listed = false;
      for (const auto& m : maxes)
        if (m == u) listed = true;
      CHECK((maximality_check(L, u) == Maximality::maximal) == listed);
    }
  }
}

TEST_CASE("complemented chief factor indices and dimension counting") {
  LieAlgebra d2 = dim2_nonabelian(GF3);
  ChiefSeries s = chief_series(d2);
  CHECK(complemented_chief_factor(d2, span_of(GF3, 2, {{0, 1}}), s) == 0);
  CHECK(complemented_chief_factor(d2, span_of(GF3, 2, {{1, 0}}), s) == 1);

  LieAlgebra aa = almost_abelian(GF3);
  ChiefSeries sa = chief_series(aa);
  Subspace m = span_of(GF3, 3, {{1, 0, 0}, {0, 1, 0}});
  std::size_t k = complemented_chief_factor(aa, m, sa);
  CHECK(aa.dim() == m.dim() + sa.terms[k + 1].dim() - sa.terms[k].dim());

  // every maximal subalgebra of every small fixture complements some factor
  for (auto f : {GF2, GF3}) {
    for (auto make : {dim2_nonabelian, heisenberg, almost_abelian}) {
      LieAlgebra L = make(f);
      ChiefSeries series = chief_series(L);
      for (const auto& mx : maximal_subalgebras(L)) {
        std::size_t idx = complemented_chief_factor(L, mx, series);
        CHECK(L.dim() ==
              mx.dim() + series.terms[idx + 1].dim() - series.terms[idx].dim());
      }
    }
  }
}

TEST_CASE("minimal ideals of solvable fixtures are abelian") {
  for (auto f : {GF2, GF3}) {
    for (auto make : {dim2_nonabelian, heisenberg, almost_abelian}) {
      LieAlgebra L = make(f);
      for (const auto& a : minimal_ideals(L))
        CHECK(product_space(L, a, a).is_zero());
    }
  }
  for (int64_t p : {2, 3}) {
    LieAlgebra cw = cyclic_weight_algebra(p);
    for (const auto& a : minimal_ideals(cw))
      CHECK(product_space(cw, a, a).is_zero());
  }
}

TEST_CASE("cyclic-weight algebra: structure facts") {
  // over GF(2): dim 4, unique minimal ideal span(e_0, e_1)
  LieAlgebra cw2 = cyclic_weight_algebra(2);
  CHECK(cw2.dim() == 4);
  auto mins = minimal_ideals(cw2);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] == span_of(GF2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(is_solvable(cw2));

  LieAlgebra cw3 = cyclic_weight_algebra(3);
  CHECK(cw3.dim() == 5);
  CHECK(is_solvable(cw3));
}
