#include "support.hpp"

#include "ordalg/catalog.hpp"
#include "ordalg/error.hpp"
#include "ordalg/order.hpp"

#include <doctest.h>

using namespace ordalg;

namespace {

struct Pair {
  Monoid m;
  oracle::Model o;
};

std::vector<Pair> plain_catalog() {
  return {{Monoid::natural_add(40), oracle::natural(40)},
          {Monoid::free_commutative(2, 6), oracle::free_rank2(6)},
          {Monoid::positive_mul(50), oracle::multiplicative(50)},
          {Monoid::numerical_semigroup({2, 3}, 40), oracle::numerical({2, 3}, 40)},
          {Monoid::block_monoid(3, 9), oracle::block(3, 9)}};
}

} // namespace

TEST_CASE("structural checks hold on the catalog") {
  for (const auto &e : catalog()) {
    auto inst = load_instance(e.name);
    CAPTURE(e.name);
    CHECK(check_cancellative(inst.monoid).holds());
    CHECK(check_conic(inst.monoid).holds());
    CHECK(check_divisibility_order(inst.monoid).holds());
  }
}

TEST_CASE("a table with a unit pair is not conic") {
  TableSpec t;
  t.names = {"0", "u", "v"};
  t.add = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  t.leq = {{true, false, false}, {false, true, false}, {false, false, true}};
  auto m = Monoid::table(t);
  auto v = check_conic(m);
  CHECK(v.fails());
}

TEST_CASE("primality per element matches the brute-force scan") {
  for (const auto &[m, o] : plain_catalog()) {
    CAPTURE(m.id());
    auto idx = testing::index_map(m, o);
    auto bad = oracle::non_primal(o);
    for (ElemId x = 0; x < m.size(); ++x) {
      bool expected = std::find(bad.begin(), bad.end(), idx[x]) == bad.end();
      CHECK(is_primal(m, x).holds() == expected);
    }
  }
}

TEST_CASE("primality witnesses in <2,3> and B(Z/3)") {
  auto ns = Monoid::numerical_semigroup({2, 3}, 40);
  auto v = is_primal(ns, Element(2));
  REQUIRE(v.fails());
  REQUIRE(v.witness.size() == 2);
  // 2 <= y1 + y2 but neither part can carry a piece of 2.
  auto s = ns.add(v.witness[0], v.witness[1]);
  REQUIRE(std::holds_alternative<Element>(s));
  CHECK(ns.leq(Element(2), std::get<Element>(s)));

  auto bm = Monoid::block_monoid(3, 9);
  CHECK(is_primal(bm, bm.parse_element("[1,2]")).fails());
  CHECK(is_primal(bm, bm.parse_element("[0]")).holds());
}

TEST_CASE("rigid and homogeneous elements match the brute-force scans") {
  for (const auto &[m, o] : plain_catalog()) {
    CAPTURE(m.id());
    auto idx = testing::index_map(m, o);
    for (ElemId x = 0; x < m.size(); ++x) {
      if (x == m.identity()) continue;
      CHECK(is_rigid(m, x).holds() == oracle::rigid(o, idx[x]));
      CHECK(is_homogeneous(m, x).holds() == oracle::homogeneous(o, idx[x]));
    }
  }
  auto m = Monoid::positive_mul(50);
  CHECK_THROWS_AS((void)is_rigid(m, Element(1)), IdentityInput);
  CHECK_THROWS_AS((void)is_homogeneous(m, Element(1)), IdentityInput);
}

TEST_CASE("glb and minimal upper bounds in the positive integers") {
  auto m = Monoid::positive_mul(50);
  auto g = glb(m, {Element(12), Element(18)});
  REQUIRE(g.has_value());
  CHECK(*g == Element(6));
  CHECK(*glb(m, {Element(4), Element(9)}) == Element(1));
  CHECK(are_disjoint(m, Element(4), Element(9)));
  CHECK_FALSE(are_disjoint(m, Element(4), Element(6)));
}

TEST_CASE("sum-of-disjoint-elements readings match the brute-force bounds") {
  for (const auto &[m, o] : plain_catalog()) {
    CAPTURE(m.id());
    auto idx = testing::index_map(m, o);
    for (ElemId a = 0; a < m.size(); ++a)
      for (ElemId b = 0; b < m.size(); ++b) {
        if (a == m.identity() || b == m.identity() || !m.sum(a, b)) continue;
        auto r = sum_upper_bound_unchecked(m, a, b);
        CHECK(r.glb_zero == oracle::glb_is_zero(o, idx[a], idx[b]));
        CHECK(r.least == oracle::sum_is_least_upper(o, idx[a], idx[b]));
        CHECK(r.minimal == oracle::sum_is_minimal_upper(o, idx[a], idx[b]));
      }
  }
}

TEST_CASE("the least-upper-bound reading fails at (2, 3) in <2,3>") {
  auto ns = Monoid::numerical_semigroup({2, 3}, 40);
  auto r = check_sum_upper_bound(ns, Element(2), Element(3));
  CHECK(r.glb_zero);
  CHECK(r.minimal);
  CHECK_FALSE(r.least);
  CHECK(r.minimal_reading_holds);
  CHECK_FALSE(r.least_reading_holds);
  CHECK_THROWS_AS((void)check_sum_upper_bound(ns, Element(0), Element(3)), PreconditionUnmet);
}

TEST_CASE("bases of the positive integers and of N^2") {
  auto mul = Monoid::positive_mul(30);
  auto b = find_basis(mul);
  REQUIRE(b.found());
  CHECK(b.certified);
  std::vector<std::string> expected;
  for (int p : oracle::primes_up_to(30)) expected.push_back(std::to_string(p));
  auto got = testing::bare_all(mul, b.members());
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK(verify_basis(mul, b.members()).holds());

  auto fc = Monoid::free_commutative(2, 6);
  auto fb = find_basis(fc);
  REQUIRE(fb.found());
  auto fgot = testing::bare_all(fc, fb.members());
  std::sort(fgot.begin(), fgot.end());
  CHECK(fgot == std::vector<std::string>{"(0,1)", "(1,0)"});
  CHECK(verify_basis(fc, fb.members()).holds());
}

TEST_CASE("verify_basis rejects overlapping or replaceable sets") {
  auto mul = Monoid::positive_mul(30);
  auto overlap = verify_basis(mul, {Element(2), Element(4), Element(3)});
  REQUIRE(overlap.fails());
  CHECK(overlap.witness.size() == 2);
  // {6} can be swapped for {2, 3}.
  auto swap = verify_basis(mul, {Element(6), Element(5), Element(7)});
  CHECK(swap.fails());
}

TEST_CASE("disjointness conditions agree on the catalog") {
  for (const auto &e : catalog()) {
    auto inst = load_instance(e.name);
    CAPTURE(e.name);
    auto r = check_disjointness_equivalence(inst.monoid);
    CHECK(r.contract_holds);
    CHECK(r.f_condition.holds());
    CHECK(find_basis(inst.monoid).found());
  }
}

TEST_CASE("prime quanta in the positive integers") {
  auto big = Monoid::positive_mul(4096);
  auto q8 = is_prime_quantum(big, Element(8), 4);
  CHECK(q8.holds());
  CHECK(oracle::mul_prime_quantum(8, 4, 4096) == std::optional<bool>(true));

  auto m = Monoid::positive_mul(50);
  auto q6 = is_prime_quantum(m, Element(6), 6);
  CHECK(q6.fails());
  CHECK(oracle::mul_prime_quantum(6, 6, 50) == std::optional<bool>(false));
  // 2·8 = 64 is outside the window.
  CHECK(is_prime_quantum(m, Element(8), 4).inconclusive());
  CHECK(!oracle::mul_prime_quantum(8, 4, 50).has_value());

  auto nat = Monoid::natural_add(40);
  for (int q = 1; q <= 6; ++q) CHECK(is_prime_quantum(nat, Element(q), q).holds());
}

TEST_CASE("pre-Riesz on the catalog") {
  for (const auto &e : catalog()) {
    auto inst = load_instance(e.name);
    CAPTURE(e.name);
    CHECK(check_pre_riesz(inst.monoid, 3).holds());
  }
}
