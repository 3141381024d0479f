#pragma once

// Exact arithmetic in quadratic orders Z[w] and their fractional ideals.
//
// w satisfies w^2 = t*w + c0 with (t, c0) = (0, d) for w = sqrt(d) and
// (1, (d-1)/4) for w = (1 + sqrt(d))/2. Fractional ideals are rank-2 lattices
// Z*(a/den) + Z*((b + c*w)/den) kept in a unique reduced Hermite form.

#include "ordalg/verdict.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordalg {

using Int = std::int64_t;

enum class OrderForm { Maximal, SqrtOrder };

class QuadraticRing {
public:
  /// Throws SchemaError unless d is squarefree and d != 0, 1.
  explicit QuadraticRing(Int d, OrderForm form = OrderForm::Maximal);
  /// "d=-5" or "d=-3:sqrt" (also "d=-3:maximal").
  static QuadraticRing parse(const std::string &text);

  [[nodiscard]] Int d() const { return d_; }
  [[nodiscard]] OrderForm form() const { return form_; }
  /// w^2 = t*w + c0.
  [[nodiscard]] Int t() const { return t_; }
  [[nodiscard]] Int c0() const { return c0_; }
  [[nodiscard]] Int discriminant() const { return t_ * t_ + 4 * c0_; }
  /// Index of the order in the maximal order (1 or 2).
  [[nodiscard]] Int conductor() const { return conductor_; }
  [[nodiscard]] bool is_imaginary() const { return d_ < 0; }
  [[nodiscard]] std::string id() const;

  bool operator==(const QuadraticRing &o) const {
    return d_ == o.d_ && t_ == o.t_;
  }

private:
  Int d_;
  OrderForm form_;
  Int t_ = 0;
  Int c0_ = 0;
  Int conductor_ = 1;
};

/// a + b*w.
struct RingElement {
  Int a = 0;
  Int b = 0;
  auto operator<=>(const RingElement &) const = default;
};

/// (a + b*w) / den with den > 0.
struct FieldElement {
  Int a = 0;
  Int b = 0;
  Int den = 1;
};

[[nodiscard]] Int norm(const QuadraticRing &R, const RingElement &x);
[[nodiscard]] RingElement mul(const QuadraticRing &R, const RingElement &x,
                              const RingElement &y);
[[nodiscard]] RingElement conj(const QuadraticRing &R, const RingElement &x);
[[nodiscard]] bool is_unit(const QuadraticRing &R, const RingElement &x);
[[nodiscard]] std::string render(const RingElement &x);

/// Canonical element order: (|N(x)|, a, b).
[[nodiscard]] bool element_less(const QuadraticRing &R, const RingElement &x,
                                const RingElement &y);

/// Nonnegative rational p/q in lowest terms.
struct Rational {
  Int num = 0;
  Int den = 1;
  auto operator<=>(const Rational &o) const {
    return static_cast<__int128>(num) * o.den <=> static_cast<__int128>(o.num) * den;
  }
  bool operator==(const Rational &o) const { return num == o.num && den == o.den; }
};

class FractionalIdeal {
public:
  /// R-module generated by the given field elements. Throws ZeroIdeal.
  static FractionalIdeal from_generators(const QuadraticRing &R,
                                         const std::vector<FieldElement> &gens);
  static FractionalIdeal from_generators(const QuadraticRing &R,
                                         const std::vector<RingElement> &gens);
  static FractionalIdeal principal(const QuadraticRing &R, const RingElement &x);
  static FractionalIdeal unit(const QuadraticRing &R);
  /// Lattice spanned over Z by integer coordinate vectors (x, y) / den that is
  /// known to be an R-module. Throws ZeroIdeal / InvariantViolation.
  static FractionalIdeal from_lattice(const QuadraticRing &R,
                                      const std::vector<std::pair<Int, Int>> &vecs,
                                      Int den);
  /// From the serialized form {"basis": [[a, 0], [b, c]], "den": den}.
  static FractionalIdeal from_hermite(const QuadraticRing &R, Int a, Int b, Int c,
                                      Int den);

  [[nodiscard]] const QuadraticRing &ring() const { return ring_; }
  [[nodiscard]] Int a() const { return a_; }
  [[nodiscard]] Int b() const { return b_; }
  [[nodiscard]] Int c() const { return c_; }
  [[nodiscard]] Int den() const { return den_; }
  /// Basis rows in (1, w) coordinates: (a, 0) and (b, c), before dividing by den.
  [[nodiscard]] std::pair<std::pair<Int, Int>, std::pair<Int, Int>> rows() const {
    return {{a_, 0}, {b_, c_}};
  }
  /// Z-basis as field elements.
  [[nodiscard]] std::vector<FieldElement> z_basis() const;

  [[nodiscard]] Rational norm() const;
  [[nodiscard]] bool is_integral() const { return den_ == 1; }
  [[nodiscard]] bool is_unit_ideal() const {
    return den_ == 1 && a_ == 1 && c_ == 1 && b_ == 0;
  }
  [[nodiscard]] bool contains(const FieldElement &x) const;
  [[nodiscard]] bool contains(const RingElement &x) const {
    return contains(FieldElement{x.a, x.b, 1});
  }
  /// this ⊆ other
  [[nodiscard]] bool subset_of(const FractionalIdeal &other) const;

  /// "(2, 1+w)"; fractional ideals get a "/den" suffix.
  [[nodiscard]] std::string render() const;

  bool operator==(const FractionalIdeal &o) const {
    return ring_ == o.ring_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && den_ == o.den_;
  }
  /// Canonical order: norm, then the serialized basis (c, b, a), then den.
  [[nodiscard]] bool operator<(const FractionalIdeal &o) const;

private:
  FractionalIdeal(QuadraticRing R, Int a, Int b, Int c, Int den)
      : ring_(R), a_(a), b_(b), c_(c), den_(den) {}
  QuadraticRing ring_;
  Int a_, b_, c_, den_;
};

[[nodiscard]] FractionalIdeal multiply(const FractionalIdeal &I, const FractionalIdeal &J);
[[nodiscard]] FractionalIdeal sum(const FractionalIdeal &I, const FractionalIdeal &J);
[[nodiscard]] FractionalIdeal intersect(const FractionalIdeal &I, const FractionalIdeal &J);
[[nodiscard]] FractionalIdeal scale(const FractionalIdeal &I, const FieldElement &x);
/// {x in K : xJ ⊆ I}.
[[nodiscard]] FractionalIdeal colon(const FractionalIdeal &I, const FractionalIdeal &J);
[[nodiscard]] FractionalIdeal colon(const QuadraticRing &R, const FractionalIdeal &I,
                                    const FractionalIdeal &J);
[[nodiscard]] FractionalIdeal inverse(const FractionalIdeal &I);

enum class StarKind { D, V, T };
[[nodiscard]] const char *to_string(StarKind k);

[[nodiscard]] FractionalIdeal v_closure(const FractionalIdeal &I);
/// Sum of the v-closures of the ideals generated by the nonempty subsets of
/// the Z-basis; for finitely generated ideals this agrees with v_closure,
/// which is asserted (ContractViolation).
[[nodiscard]] FractionalIdeal t_closure(const FractionalIdeal &I);
[[nodiscard]] FractionalIdeal closure(StarKind k, const FractionalIdeal &I);
[[nodiscard]] bool is_t_invertible(const FractionalIdeal &I);

/// Box in which every principal ideal of the given norm has a generator.
struct NormSearchBox {
  Int a_bound = 0;
  Int b_bound = 0;
  bool certified = false;
  std::string description;
};
[[nodiscard]] NormSearchBox norm_search_box(const QuadraticRing &R, Int n);

/// Elements of norm +-n up to units, canonical order, within norm_search_box.
[[nodiscard]] std::vector<RingElement> elements_of_norm(const QuadraticRing &R, Int n);

/// A generator of I (which may be fractional), or nullopt if none exists.
struct PrincipalityResult {
  std::optional<FieldElement> generator;
  NormSearchBox box;
};
[[nodiscard]] PrincipalityResult principal_generator(const FractionalIdeal &I);
[[nodiscard]] bool is_principal(const FractionalIdeal &I);

/// Fundamental unit of a real quadratic order (a + b*w with b > 0 minimal).
[[nodiscard]] RingElement fundamental_unit(const QuadraticRing &R);

/// Kronecker symbol (D/p) for a prime p.
[[nodiscard]] int kronecker(Int D, Int p);

/// Trial-division factorization; throws NormTooLarge above `limit`.
[[nodiscard]] std::vector<std::pair<Int, unsigned>> factor(Int n, Int limit = Int{1} << 40);

/// Primes of R above the rational prime p, canonical order. The split type
/// from the Kronecker symbol is cross-checked against the roots of the
/// minimal polynomial of w mod p. Throws Unsupported for primes dividing the
/// conductor.
[[nodiscard]] std::vector<FractionalIdeal> primes_above(const QuadraticRing &R, Int p);

/// The conductor ideal {x : x*O_K ⊆ R} (the unit ideal for maximal orders).
[[nodiscard]] FractionalIdeal conductor_ideal(const QuadraticRing &R);

/// All integral ideals of norm <= bound, canonical order (brute-force HNF scan).
[[nodiscard]] std::vector<FractionalIdeal> enumerate_integral_ideals(const QuadraticRing &R,
                                                                     Int bound);

/// Parse "a+bw", "3", "-w", "1+2w", ...
[[nodiscard]] RingElement parse_ring_element(const std::string &text);

} // namespace ordalg
