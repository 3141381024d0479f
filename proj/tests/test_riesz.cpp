#include "support.hpp"

#include "ordalg/error.hpp"
#include "ordalg/riesz.hpp"

#include <doctest.h>

using namespace ordalg;

namespace {

GroupElement ge(Element p, Element n) { return {std::move(p), std::move(n)}; }

} // namespace

TEST_CASE("the three interpolation conditions agree with each other and the scans") {
  struct Row {
    Monoid m;
    oracle::Model o;
    const char *witness;
  };
  std::vector<Row> rows = {
      {Monoid::natural_add(40), oracle::natural(40), nullptr},
      {Monoid::free_commutative(2, 6), oracle::free_rank2(6), nullptr},
      {Monoid::positive_mul(50), oracle::multiplicative(50), nullptr},
      {Monoid::numerical_semigroup({2, 3}, 40), oracle::numerical({2, 3}, 40), "2"},
      {Monoid::block_monoid(3, 9), oracle::block(3, 9), "[1,2]"},
  };
  for (const auto &r : rows) {
    CAPTURE(r.m.id());
    auto eq = check_riesz_monoid(r.m, 3);
    CHECK(eq.equivalence_holds);
    CHECK(eq.implications_hold);
    CHECK(eq.all_primal.status == eq.interpolation_22.status);
    CHECK(eq.all_primal.status == eq.interpolation_nm.status);
    CHECK(eq.all_primal.holds() == oracle::non_primal(r.o).empty());
    CHECK(eq.interpolation_22.holds() == oracle::all_interpolate_22(r.o));
    if (r.witness) {
      REQUIRE(eq.all_primal.fails());
      REQUIRE(eq.all_primal.witness.size() == 1);
      auto w = testing::bare(r.m, eq.all_primal.witness[0]);
      CHECK(w == r.witness);
      CHECK_FALSE(oracle::primal(r.o, r.o.find(w)));
    } else {
      CHECK(eq.all_primal.holds());
    }
  }
}

TEST_CASE("(2,2) interpolation by search and by construction") {
  auto m = Monoid::positive_mul(50);
  auto s = interpolate_22(m, Element(2), Element(3), Element(12), Element(18),
                          InterpolationMode::Search);
  REQUIRE(std::holds_alternative<InterpolationWitness>(s));
  CHECK(std::get<InterpolationWitness>(s).element() == Element(6));

  auto c = interpolate_22(m, Element(2), Element(3), Element(12), Element(18),
                          InterpolationMode::Constructive);
  REQUIRE(std::holds_alternative<InterpolationWitness>(c));
  const auto &w = std::get<InterpolationWitness>(c);
  CHECK(w.all_checks_hold());
  CHECK_FALSE(w.checks.empty());
  const Element &z = w.element();
  for (int lo : {2, 3}) CHECK(m.leq(Element(lo), z));
  for (int hi : {12, 18}) CHECK(m.leq(z, Element(hi)));

  CHECK_THROWS_AS((void)interpolate_22(m, Element(5), Element(3), Element(12), Element(18),
                                       InterpolationMode::Search),
                  PreconditionUnmet);
}

TEST_CASE("no interpolant for 2, 3 below 5, 6 in <2,3>") {
  auto ns = Monoid::numerical_semigroup({2, 3}, 40);
  auto o = oracle::numerical({2, 3}, 40);
  CHECK_FALSE(oracle::interpolates(o, o.find("2"), o.find("3"), o.find("5"), o.find("6")));
  auto s = interpolate_22(ns, Element(2), Element(3), Element(5), Element(6),
                          InterpolationMode::Search);
  CHECK(std::holds_alternative<NoInterpolant>(s));
  CHECK_THROWS_AS((void)interpolate_22(ns, Element(2), Element(3), Element(5), Element(6),
                                       InterpolationMode::Constructive),
                  PrimalWitnessUnavailable);
}

TEST_CASE("constructive and search modes agree on all-primal windows") {
  for (const auto &m : {Monoid::natural_add(20), Monoid::free_commutative(2, 4),
                        Monoid::positive_mul(36)})
    CHECK(check_interpolation_modes_agree(m).holds());
}

TEST_CASE("(n,m) interpolation") {
  auto m = Monoid::positive_mul(50);
  auto r = interpolate_nm(m, {Element(2), Element(3)}, {Element(12), Element(18), Element(30)});
  REQUIRE(std::holds_alternative<InterpolationWitness>(r));
  const auto &z = std::get<InterpolationWitness>(r).element();
  CHECK(z == Element(6));

  auto single = interpolate_nm(m, {Element(2)}, {Element(4)});
  REQUIRE(std::holds_alternative<InterpolationWitness>(single));
  CHECK(std::get<InterpolationWitness>(single).element() == Element(2));
}

TEST_CASE("group of differences: normal forms and order") {
  GroupContext mul(Monoid::positive_mul(50));
  CHECK(*mul.normal_form(ge(6, 4)) == std::vector<std::int64_t>{3, 2});
  CHECK(*mul.equal(ge(6, 4), ge(3, 2)) == true);
  CHECK(*mul.leq(ge(3, 2), ge(3, 1)) == true);
  CHECK(*mul.leq(ge(3, 1), ge(3, 2)) == false);
  // 43/47 vs 47/43: both cross products leave the window.
  CHECK(*mul.leq(ge(43, 47), ge(47, 43)) == false);
  // 1/47 <= 43/47 decided without the out-of-window cross product 43·47.
  CHECK(*mul.leq(ge(1, 47), ge(43, 47)) == true);

  GroupContext ns(Monoid::numerical_semigroup({2, 3}, 40));
  CHECK(*ns.leq(ge(2, 0), ge(3, 0)) == false); // 3 - 2 = 1 is not in the semigroup
  CHECK(*ns.leq(ge(2, 0), ge(5, 0)) == true);
  CHECK(*ns.leq(ge(40, 39), ge(40, 37)) == true);

  CHECK_THROWS_AS((void)GroupContext(Monoid::table(TableSpec{{"0", "u"}, {{0, 1}, {1, 0}},
                                                       {{true, false}, {false, true}}})),
                  HypothesisUnmet);
}

TEST_CASE("group interpolation: split path and the <2,3> counterexample") {
  GroupContext g(Monoid::natural_add(40));
  auto r = group_interpolate(g, ge(3, 5), ge(1, 2), ge(7, 1), ge(9, 2));
  REQUIRE(std::holds_alternative<InterpolationWitness>(r));
  const auto &w = std::get<InterpolationWitness>(r);
  CHECK(w.all_checks_hold());
  CHECK(w.path == "split");

  GroupContext ns(Monoid::numerical_semigroup({2, 3}, 40));
  auto none = group_interpolate(ns, ge(2, 0), ge(3, 0), ge(5, 0), ge(6, 0));
  CHECK(std::holds_alternative<NoInterpolant>(none));

  CHECK_THROWS_AS((void)group_interpolate(g, ge(9, 0), ge(1, 0), ge(2, 0), ge(3, 0)),
                  PreconditionUnmet);
}

TEST_CASE("group sweeps over the all-primal catalog") {
  for (const auto &m : {Monoid::natural_add(40), Monoid::free_commutative(2, 6),
                        Monoid::positive_mul(50)}) {
    CAPTURE(m.id());
    GroupContext g(m);
    auto rep = sweep_group_interpolation(g, 8);
    CHECK(rep.verdict.holds());
    CHECK(rep.quadruples > 0);
    CHECK(rep.no_interpolant == 0);
    CHECK(rep.derivation_failures == 0);
    CHECK(rep.modes_agree);
  }
  GroupContext ns(Monoid::numerical_semigroup({2, 3}, 40));
  auto rep = sweep_group_interpolation(ns, 8);
  CHECK(rep.verdict.fails());
  CHECK(rep.no_interpolant > 0);
  CHECK(rep.derivation_failures == 0);
}
