#include "oracle.hpp"

#include "ordalg/error.hpp"
#include "ordalg/order.hpp"
#include "ordalg/star.hpp"

#include <doctest.h>

using namespace ordalg;

namespace {

oracle::Lattice lat(const FractionalIdeal &I) { return {I.a(), I.b(), I.c()}; }

oracle::Lattice residue_lattice(const oracle::ResidueIdeal &P) {
  std::vector<oracle::Vec> gens = {{P.p, 0}, {0, P.p}};
  if (P.line) gens.push_back(*P.line);
  return oracle::span(gens);
}

std::vector<oracle::Lattice> lats(const std::vector<FractionalIdeal> &Is) {
  std::vector<oracle::Lattice> out;
  for (const auto &I : Is) out.push_back(lat(I));
  return out;
}

bool same_set(std::vector<oracle::Lattice> a, std::vector<oracle::Lattice> b) {
  auto key = [](const oracle::Lattice &L) { return std::tuple(L.a, L.b, L.c); };
  auto less = [&](const auto &l, const auto &r) { return key(l) < key(r); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

FractionalIdeal ideal(const QuadraticRing &R, std::vector<RingElement> gens) {
  return FractionalIdeal::from_generators(R, gens);
}

} // namespace

TEST_CASE("maximal ideals over (6) in Z[sqrt(-5)]") {
  auto R = QuadraticRing::parse("d=-5");
  auto six = FractionalIdeal::principal(R, {6, 0});
  auto got = maximal_t_ideals_containing(six);
  std::vector<oracle::Lattice> want;
  for (const auto &P : oracle::maximal_containing(0, -5, lat(six)))
    want.push_back(residue_lattice(P));
  CHECK(want.size() == 3);
  CHECK(same_set(lats(got), want));
  CHECK(got[0].render() == "(2, 1+w)");
  // (6) = P2^2 P3 P3'
  CHECK(valuation(six, got[0]) == 2);
  CHECK(valuation(six, got[1]) == 1);
  CHECK(valuation(FractionalIdeal::principal(R, {3, 0}), got[0]) == 0);
}

TEST_CASE("homogeneity of (2) and (6)") {
  auto R = QuadraticRing::parse("d=-5");
  auto two = FractionalIdeal::principal(R, {2, 0});
  auto P2 = ideal(R, {{2, 0}, {1, 1}});
  CHECK(is_homogeneous_ideal(two).holds());
  CHECK(M_of(two) == P2);

  auto six = FractionalIdeal::principal(R, {6, 0});
  auto v = is_homogeneous_ideal(six);
  REQUIRE(v.fails());
  CHECK(same_set(lats(v.witness), lats(maximal_t_ideals_containing(six))));
  CHECK_THROWS_AS((void)M_of(six), NotHomogeneous);
}

TEST_CASE("homogeneity matches the residue count and the pairwise-sum criterion") {
  for (std::string name : {"d=-5", "d=-1", "d=-3", "d=2"}) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    for (const auto &I : enumerate_integral_ideals(R, 50)) {
      if (I.is_unit_ideal()) continue;
      CAPTURE(I.render());
      auto count = oracle::maximal_containing(R.t(), R.c0(), lat(I)).size();
      CHECK(maximal_t_ideals_containing(I).size() == count);
      CHECK(is_homogeneous_ideal(I).holds() == (count == 1));
      auto rep = check_pairwise_proper_sums(I, I.a() * I.c());
      CHECK(rep.agrees);
    }
  }
}

TEST_CASE("comaximal families over (6)") {
  auto R = QuadraticRing::parse("d=-5");
  auto six = FractionalIdeal::principal(R, {6, 0});
  auto c = comaximal_family_count(six, 36);
  CHECK(c.count == 3);
  CHECK(c.expected == 3);
  CHECK(c.agrees);
  for (std::size_t i = 0; i < c.family.size(); ++i)
    for (std::size_t j = i + 1; j < c.family.size(); ++j)
      CHECK(t_closure(sum(c.family[i], c.family[j])).is_unit_ideal());
}

TEST_CASE("building a homogeneous ideal from 6") {
  auto R = QuadraticRing::parse("d=-5");
  auto h = build_homogeneous_from(R, {6, 0});
  CHECK(is_homogeneous_ideal(h.ideal).holds());
  CHECK(h.ideal.contains(RingElement{6, 0}));
  CHECK(oracle::maximal_containing(0, -5, lat(h.ideal)).size() == 1);
  CHECK(M_of(h.ideal) == h.M);
  CHECK_THROWS_AS((void)build_homogeneous_from(R, {1, 0}), UnitInput);
}

TEST_CASE("f-rigid elements") {
  auto R = QuadraticRing::parse("d=-5");
  auto r2 = is_f_rigid(R, {2, 0}, 50);
  REQUIRE(r2.fails());
  CHECK(r2.witness.front().render() == "(2, 1+w)");
  auto G = QuadraticRing::parse("d=-1");
  CHECK(is_f_rigid(G, {8, 0}, 64).holds());
  CHECK(is_f_rigid(G, {3, 0}, 64).holds());
}

TEST_CASE("potency") {
  auto R = QuadraticRing::parse("d=-5");
  auto pr = potency_report(R, 36);
  CHECK(pr.potent);
  CHECK_FALSE(pr.f_potent);
  for (const auto &e : pr.entries) {
    CHECK(is_homogeneous_ideal(e.homogeneous).holds());
    CHECK(M_of(e.homogeneous) == e.M);
  }
  auto G = potency_report(QuadraticRing::parse("d=-1"), 36);
  CHECK(G.potent);
  CHECK(G.f_potent);
}

TEST_CASE("primitive versus superprimitive polynomials") {
  auto R = QuadraticRing::parse("d=-5");
  auto p = psp_probe(R, {{2, 0}, {1, 1}});
  CHECK(p.primitive);
  CHECK_FALSE(p.superprimitive);
  CHECK(p.content == ideal(R, {{2, 0}, {1, 1}}));
  CHECK_FALSE(p.common_divisor.has_value());
  auto q = psp_probe(R, {{2, 0}, {4, 2}});
  CHECK_FALSE(q.primitive);
  CHECK_THROWS_AS((void)psp_probe(R, {{0, 0}}), ZeroIdeal);

  auto G = QuadraticRing::parse("d=-1");
  std::vector<RingElement> small;
  for (Int a = -2; a <= 2; ++a)
    for (Int b = -2; b <= 2; ++b)
      if ((a || b) && a * a + b * b <= 5) small.push_back({a, b});
  for (const auto &x : small)
    for (const auto &y : small) {
      auto r = psp_probe(G, {x, y});
      CHECK(r.primitive == r.superprimitive);
    }
}

TEST_CASE("property P") {
  auto R = QuadraticRing::parse("d=-5");
  auto v = property_P_check(R, {{{2, 0}, {1, 1}}});
  CHECK(v.fails());
  CHECK(property_P_check(R, {{{2, 0}, {4, 0}}}).holds());
  auto G = QuadraticRing::parse("d=-1");
  std::vector<std::vector<RingElement>> tuples;
  for (Int a = 0; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      if (a || b) tuples.push_back({{a, b}, {3, 1}});
  CHECK(property_P_check(G, tuples).holds());
}

TEST_CASE("the exported monoid of t-ideals") {
  auto R = QuadraticRing::parse("d=-5");
  auto fim = export_star_fim(R, 36);
  const auto &m = fim.monoid;
  CHECK(m.size() == 51);
  CHECK(fim.ideals.size() == 51);
  CHECK(fim.inf_is_t_sum.holds());
  CHECK(check_pre_riesz(m, 3).holds());
  // In a Dedekind domain glb(H, K) is the plain sum H + K.
  for (ElemId i = 0; i < m.size(); ++i)
    for (ElemId j = i; j < m.size(); ++j) {
      auto g = glb_id(m, {i, j});
      REQUIRE(g.has_value());
      CHECK(lat(fim.ideals[*g]) == oracle::lattice_sum(lat(fim.ideals[i]), lat(fim.ideals[j])));
    }
}

TEST_CASE("Schreier probe") {
  auto s = schreier_probe(QuadraticRing::parse("d=-5"), 36);
  CHECK(s.all_primal.holds());
  CHECK(s.all_principal.fails());
  CHECK(s.consistent);
  auto g = schreier_probe(QuadraticRing::parse("d=-1"), 25);
  CHECK(g.all_primal.holds());
  CHECK(g.all_principal.holds());
  CHECK(g.consistent);
}

TEST_CASE("closure laws on fixture ideals") {
  for (std::string name : {"d=-5", "d=-3:sqrt"}) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    auto fx = closure_fixtures(R, 40);
    CHECK(fx.size() == 40);
    CHECK(check_closure_laws(fx, StarKind::V).holds());
    CHECK(check_closure_laws(fx, StarKind::T).holds());
  }
}

TEST_CASE("preconditions and unsupported requests") {
  auto S = QuadraticRing::parse("d=-3:sqrt");
  auto two = FractionalIdeal::principal(S, {2, 0});
  CHECK_THROWS_AS((void)maximal_t_ideals_containing(two), Unsupported);
  auto seven = FractionalIdeal::principal(S, {7, 0});
  CHECK(maximal_t_ideals_containing(seven).size() == 2);
  auto R = QuadraticRing::parse("d=-5");
  CHECK_THROWS_AS((void)maximal_t_ideals_containing(FractionalIdeal::unit(R)), PreconditionUnmet);
  auto half = FractionalIdeal::from_hermite(R, 1, 0, 1, 2);
  CHECK_THROWS_AS((void)maximal_t_ideals_containing(half), PreconditionUnmet);
}
