#include "oracle.hpp"

#include "ordalg/error.hpp"
#include "ordalg/io.hpp"
#include "ordalg/quadratic.hpp"

#include <doctest.h>

#include <cmath>

using namespace ordalg;

namespace {

oracle::Lattice lat(const FractionalIdeal &I) {
  REQUIRE(I.den() == 1);
  return {I.a(), I.b(), I.c()};
}

bool same(const FractionalIdeal &I, const oracle::Lattice &L) { return lat(I) == L; }

const std::vector<std::string> kRings = {"d=-5", "d=-1", "d=-3", "d=-3:sqrt",
                                         "d=2",  "d=5",  "d=-7:sqrt"};

/// Deterministic generator pairs with small coefficients.
std::vector<std::vector<RingElement>> generator_sets() {
  std::vector<RingElement> pool;
  for (Int b = 0; b <= 3; ++b)
    for (Int a = -4; a <= 4; ++a)
      if (a != 0 || b != 0) pool.push_back({a, b});
  std::vector<std::vector<RingElement>> out;
  for (std::size_t k = 0; k < 60; ++k)
    out.push_back({pool[(5 * k + 1) % pool.size()], pool[(11 * k + 7) % pool.size()]});
  return out;
}

std::vector<oracle::Vec> vecs(const std::vector<RingElement> &gs) {
  std::vector<oracle::Vec> out;
  for (const auto &g : gs) out.emplace_back(g.a, g.b);
  return out;
}

} // namespace

TEST_CASE("ring parameters") {
  auto R = QuadraticRing::parse("d=-5");
  CHECK(R.t() == 0);
  CHECK(R.c0() == -5);
  CHECK(R.discriminant() == -20);
  CHECK(R.conductor() == 1);
  auto E = QuadraticRing::parse("d=-3");
  CHECK(E.t() == 1);
  CHECK(E.c0() == -1);
  CHECK(E.discriminant() == -3);
  auto S = QuadraticRing::parse("d=-3:sqrt");
  CHECK(S.conductor() == 2);
  CHECK(S.discriminant() == -12);
  CHECK(S.id() == "d=-3:sqrt");
  CHECK(QuadraticRing::parse("d=2").discriminant() == 8);
  CHECK(QuadraticRing::parse("d=5").discriminant() == 5);
  CHECK(ring_to_json(S) == nlohmann::json{{"d", -3}, {"form", "sqrt_order"}});
  CHECK(ring_from_json(ring_to_json(S)) == S);
  CHECK_THROWS_AS((void)QuadraticRing::parse("d=4"), SchemaError);
  CHECK_THROWS_AS((void)QuadraticRing::parse("d=0"), SchemaError);
  CHECK_THROWS_AS((void)QuadraticRing::parse("x"), SchemaError);
}

TEST_CASE("element arithmetic") {
  auto R = QuadraticRing::parse("d=-5");
  RingElement x{1, 1};
  CHECK(norm(R, x) == 6);
  CHECK(mul(R, x, conj(R, x)) == RingElement{6, 0});
  CHECK(render(RingElement{-1, 1}) == "-1+w");
  CHECK(render(RingElement{0, -1}) == "-w");
  CHECK(parse_ring_element("2-3w") == RingElement{2, -3});
  auto E = QuadraticRing::parse("d=-3");
  CHECK(norm(E, {0, 1}) == 1); // w is a sixth root of unity
  CHECK(is_unit(E, {0, 1}));
  auto D2 = QuadraticRing::parse("d=2");
  auto eps = fundamental_unit(D2);
  CHECK(std::llabs(static_cast<long long>(norm(D2, eps))) == 1);
  CHECK(eps == RingElement{1, 1});
}

TEST_CASE("ideals from generators match the lattice scan") {
  for (const auto &name : kRings) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    for (const auto &gs : generator_sets()) {
      auto I = FractionalIdeal::from_generators(R, gs);
      CHECK(same(I, oracle::ideal(R.t(), R.c0(), vecs(gs))));
    }
  }
}

TEST_CASE("products, sums and intersections match the lattice scan") {
  for (const auto &name : kRings) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    auto sets = generator_sets();
    for (std::size_t k = 0; k + 1 < sets.size(); k += 3) {
      auto I = FractionalIdeal::from_generators(R, sets[k]);
      auto J = FractionalIdeal::from_generators(R, sets[k + 1]);
      auto LI = lat(I), LJ = lat(J);
      CHECK(same(multiply(I, J), oracle::product(R.t(), R.c0(), LI, LJ)));
      CHECK(same(sum(I, J), oracle::lattice_sum(LI, LJ)));
      auto K = intersect(I, J);
      auto LK = lat(K);
      for (Int x = -12; x <= 12; ++x)
        for (Int y = -12; y <= 12; ++y)
          CHECK(oracle::contains(LK, {x, y}) ==
                (oracle::contains(LI, {x, y}) && oracle::contains(LJ, {x, y})));
    }
  }
}

TEST_CASE("inverse is the set of elements carrying I into R") {
  for (const auto &name : kRings) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    auto sets = generator_sets();
    for (std::size_t k = 0; k < sets.size(); k += 7) {
      auto I = FractionalIdeal::from_generators(R, sets[k]);
      auto inv = inverse(I);
      auto L = lat(I);
      const Int den = L.a * L.c;
      for (Int x = -2 * den; x <= 2 * den; x += std::max<Int>(1, den / 6))
        for (Int y = -den; y <= den; ++y) {
          bool inside = true;
          for (auto r : oracle::rows(L)) {
            auto p = oracle::mul(R.t(), R.c0(), {x, y}, r);
            if (p.first % den != 0 || p.second % den != 0) inside = false;
          }
          CHECK(inv.contains(FieldElement{x, y, den}) == inside);
        }
      auto unit = FractionalIdeal::unit(R);
      CHECK(multiply(I, inv).subset_of(unit));
    }
  }
}

TEST_CASE("golden ideals over Z[sqrt(-5)]") {
  auto R = QuadraticRing::parse("d=-5");
  auto P2 = FractionalIdeal::from_generators(R, std::vector<RingElement>{{2, 0}, {1, 1}});
  CHECK(P2.a() == 2);
  CHECK(P2.b() == 1);
  CHECK(P2.c() == 1);
  CHECK(P2.render() == "(2, 1+w)");
  auto two = FractionalIdeal::principal(R, {2, 0});
  auto three = FractionalIdeal::principal(R, {3, 0});
  CHECK(multiply(P2, P2) == two);
  CHECK(sum(two, three) == FractionalIdeal::unit(R));
  CHECK(v_closure(P2) == P2);
  CHECK(t_closure(P2) == P2);
  CHECK(is_t_invertible(P2));
  CHECK(inverse(P2) == FractionalIdeal::from_hermite(R, 2, 1, 1, 2));
  CHECK_FALSE(is_principal(P2));
  CHECK(oracle::norm_solutions(0, -5, 2, 10).empty());
  CHECK(ideal_to_json(P2) == nlohmann::json{{"basis", {{2, 0}, {1, 1}}}, {"den", 1}});
  CHECK(ideal_from_json(R, ideal_to_json(P2)) == P2);
  CHECK(parse_ideal(R, "gens=[[2,0,1],[1,1,1]]") == P2);
}

TEST_CASE("golden ideals over Z[sqrt(-3)]") {
  auto R = QuadraticRing::parse("d=-3:sqrt");
  auto M = FractionalIdeal::from_generators(R, std::vector<RingElement>{{2, 0}, {1, 1}});
  auto inv = inverse(M);
  CHECK(multiply(M, inv) == M);
  CHECK(v_closure(M) == M);
  CHECK_FALSE(is_t_invertible(M));
  CHECK(inv == FractionalIdeal::from_hermite(R, 2, 1, 1, 2));
  // The conductor ideal is M itself.
  CHECK(conductor_ideal(R) == M);
}

TEST_CASE("principality agrees with the norm-equation scan in imaginary rings") {
  for (std::string name : {"d=-5", "d=-1", "d=-3", "d=-3:sqrt", "d=-7:sqrt"}) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    for (const auto &I : enumerate_integral_ideals(R, 40)) {
      const Int n = I.a() * I.c();
      const Int r = static_cast<Int>(2 * std::sqrt(static_cast<double>(n))) + 2;
      bool found = false;
      for (auto v : oracle::norm_solutions(R.t(), R.c0(), n, r))
        if (same(I, oracle::ideal(R.t(), R.c0(), {v}))) found = true;
      CHECK(is_principal(I) == found);
      auto pr = principal_generator(I);
      if (pr.generator)
        CHECK(FractionalIdeal::from_generators(R, std::vector<FieldElement>{*pr.generator}) == I);
    }
  }
}

TEST_CASE("class number one rings are principal up to norm 50") {
  for (std::string name : {"d=-1", "d=-3", "d=2", "d=5"}) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    for (const auto &I : enumerate_integral_ideals(R, 50)) CHECK(is_principal(I));
  }
}

TEST_CASE("integral ideal enumeration matches the lattice scan") {
  for (const auto &name : kRings) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    std::vector<oracle::Lattice> expected;
    for (Int a = 1; a <= 50; ++a)
      for (Int c = 1; a * c <= 50; ++c)
        for (Int b = 0; b < a; ++b) {
          oracle::Lattice L{a, b, c};
          if (oracle::contains(L, {0, a}) &&
              oracle::contains(L, {c * R.c0(), b + c * R.t()}))
            expected.push_back(L);
        }
    auto got = enumerate_integral_ideals(R, 50);
    CHECK(got.size() == expected.size());
    for (const auto &I : got)
      CHECK(std::find(expected.begin(), expected.end(), lat(I)) != expected.end());
  }
  CHECK(enumerate_integral_ideals(QuadraticRing::parse("d=-5"), 50).size() == 73);
}

TEST_CASE("primes above p match the residue scan") {
  for (std::string name : {"d=-5", "d=-1", "d=-3", "d=2", "d=5"}) {
    auto R = QuadraticRing::parse(name);
    CAPTURE(name);
    for (Int p : {2, 3, 5, 7, 11, 13}) {
      CAPTURE(p);
      auto got = primes_above(R, p);
      auto want = oracle::maximal_over(R.t(), R.c0(), p);
      REQUIRE(got.size() == want.size());
      for (const auto &P : want) {
        std::vector<oracle::Vec> gens = {{p, 0}, {0, p}};
        if (P.line) gens.push_back(*P.line);
        auto L = oracle::span(gens);
        bool hit = false;
        for (const auto &Q : got) hit = hit || same(Q, L);
        CHECK(hit);
      }
      int k = kronecker(R.discriminant(), p);
      CHECK(got.size() == (k == 1 ? 2u : 1u));
    }
  }
  CHECK_THROWS_AS((void)primes_above(QuadraticRing::parse("d=-3:sqrt"), 2), Unsupported);
}

TEST_CASE("elements of a given norm up to units") {
  auto R = QuadraticRing::parse("d=-5");
  auto xs = elements_of_norm(R, 9);
  CHECK(xs.size() == 3); // 3, 2+w, 2-w
  for (const auto &x : xs) CHECK(norm(R, x) == 9);
  CHECK(elements_of_norm(R, 2).empty());
}

TEST_CASE("inverses of ideals with large Hermite entries stay exact") {
  auto R = QuadraticRing::parse("d=-5");
  auto A = FractionalIdeal::from_hermite(R, 205, 35, 1, 20);
  auto B = FractionalIdeal::from_hermite(R, 49, 17, 1, 10);
  auto P = multiply(A, B);
  auto inv = inverse(P);
  CHECK(multiply(P, inv) == FractionalIdeal::unit(R));
  CHECK(v_closure(P) == P);
}

TEST_CASE("ideal errors") {
  auto R = QuadraticRing::parse("d=-5");
  CHECK_THROWS_AS((void)FractionalIdeal::from_generators(R, std::vector<RingElement>{{0, 0}}),
                  ZeroIdeal);
  auto big = FractionalIdeal::principal(R, {Int{1} << 40, 0});
  CHECK_THROWS_AS((void)multiply(multiply(big, big), big), ArithmeticOverflow);
  auto other = QuadraticRing::parse("d=-1");
  CHECK_THROWS_AS((void)sum(FractionalIdeal::unit(R), FractionalIdeal::unit(other)),
                  RingMismatch);
}
