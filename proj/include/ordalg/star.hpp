#pragma once

// t-operation ideal theory over quadratic orders: maximal t-ideals,
// homogeneous ideals, rigid elements, primitive polynomials and the monoid of
// t-ideals exported as a table instance.

#include "ordalg/monoid.hpp"
#include "ordalg/order.hpp"
#include "ordalg/quadratic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordalg {

using IdealVerdict = BasicVerdict<FractionalIdeal>;
using ElementVerdict = BasicVerdict<RingElement>;

inline constexpr Int kDefaultFactorLimit = Int{1} << 40;

/// Maximal t-ideals above an integral proper ideal, canonical order. For an
/// order with nontrivial conductor, I must be comaximal with the conductor
/// (Unsupported otherwise). Throws PreconditionUnmet for fractional or unit
/// ideals and NormTooLarge past the factoring limit.
[[nodiscard]] std::vector<FractionalIdeal>
maximal_t_ideals_containing(const FractionalIdeal &I, Int factor_limit = kDefaultFactorLimit);

/// `count` distinct fractional ideals, each generated by two small field
/// elements (a + b w) / den, in a fixed enumeration order.
[[nodiscard]] std::vector<FractionalIdeal> closure_fixtures(const QuadraticRing &R,
                                                            std::size_t count);

/// Star-operation laws for k = v or t over the given ideals: extensive,
/// idempotent, R* = R, monotone, (xA)* = xA*, (AB)* = (A*B*)*, and for
/// integral proper t-ideals A, B, C with (A + B)_t = R and B ⊆ C also
/// (A + C)_t = R. FailsWith(ideals) with the violated law as the reason;
/// `checked` counts individual law instances.
[[nodiscard]] IdealVerdict check_closure_laws(const std::vector<FractionalIdeal> &ideals,
                                              StarKind k);

/// Largest k with I ⊆ P^k.
[[nodiscard]] unsigned valuation(const FractionalIdeal &I, const FractionalIdeal &P);

/// Proper t-ideals containing I with norm <= bound: the divisor lattice of
/// the factorization of I, cross-checked against t((x) + I) for small x.
[[nodiscard]] std::vector<FractionalIdeal> t_ideals_containing(const FractionalIdeal &I,
                                                               Int bound);

/// Holds iff t(I) lies in exactly one maximal t-ideal; otherwise
/// FailsWith(all maximal t-ideals above I).
[[nodiscard]] IdealVerdict is_homogeneous_ideal(const FractionalIdeal &I);

/// The unique maximal t-ideal above I. Throws NotHomogeneous. Spot-checks
/// that (x, I) is t-proper exactly when x ∈ M for small x (ContractViolation).
[[nodiscard]] FractionalIdeal M_of(const FractionalIdeal &I);

struct PairwiseSumsReport {
  /// FailsWith(X, Y): two proper t-ideals above I with t(X + Y) = R.
  IdealVerdict verdict;
  std::size_t ideals = 0;
  /// verdict.holds() == is_homogeneous_ideal(I).holds()
  bool agrees = false;
};
[[nodiscard]] PairwiseSumsReport check_pairwise_proper_sums(const FractionalIdeal &I,
                                                            Int bound);

struct HomogeneousConstruction {
  FractionalIdeal ideal;
  FractionalIdeal M;
  /// The other maximal t-ideals above x and the chosen x_i ∈ M \ M_i.
  std::vector<FractionalIdeal> others;
  std::vector<RingElement> chosen;
};

/// t-closure of (x, x_1, ..., x_n) where x_i ∈ M \ M_i for every other
/// maximal t-ideal M_i above x. M defaults to the first maximal t-ideal above
/// x. The result is verified to be homogeneous with M_of = M.
/// Throws ZeroIdeal, UnitInput, PreconditionUnmet (target not above x).
[[nodiscard]] HomogeneousConstruction
build_homogeneous_from(const QuadraticRing &R, const RingElement &x,
                       const std::optional<FractionalIdeal> &target = {});

/// Holds iff rR is t-homogeneous and every t-ideal above r (all of them are
/// homogeneous then) with norm <= bound is principal. FailsWith(maximal
/// t-ideals) when rR is not homogeneous, FailsWith(J) for a non-principal J.
[[nodiscard]] IdealVerdict is_f_rigid(const QuadraticRing &R, const RingElement &r,
                                      Int bound);

/// Maximal t-ideals of norm <= bound, canonical order. Primes over the
/// conductor are reported in `skipped`.
struct MaximalIdealScan {
  std::vector<FractionalIdeal> ideals;
  std::vector<std::string> skipped;
};
[[nodiscard]] MaximalIdealScan maximal_t_ideals_up_to(const QuadraticRing &R, Int bound);

struct PotencyEntry {
  FractionalIdeal M;
  /// Smallest nonzero element of M in canonical order.
  RingElement seed;
  FractionalIdeal homogeneous;
  /// A t-f-rigid element r with rR homogeneous under M, if one was found
  /// among elements of norm at most norm(M)^2.
  std::optional<RingElement> f_rigid;
};

struct PotencyReport {
  std::vector<PotencyEntry> entries;
  std::vector<std::string> skipped;
  bool potent = true;
  bool f_potent = true;
};
[[nodiscard]] PotencyReport potency_report(const QuadraticRing &R, Int norm_bound);

struct ComaximalCount {
  std::size_t count = 0;
  /// Number of maximal t-ideals above A.
  std::size_t expected = 0;
  bool agrees = false;
  std::vector<FractionalIdeal> family;
};
[[nodiscard]] ComaximalCount comaximal_family_count(const FractionalIdeal &A, Int bound);

/// A non-unit a with A ⊆ aR, searched over elements whose norm divides
/// norm(A). A must be integral.
[[nodiscard]] std::optional<RingElement> common_nonunit_divisor(const FractionalIdeal &A);

struct PspReport {
  FractionalIdeal content;
  FractionalIdeal content_v;
  bool primitive = false;
  bool superprimitive = false;
  std::optional<RingElement> common_divisor;
};
/// Content ideal of the polynomial with the given coefficients. Throws
/// ZeroIdeal for the zero polynomial.
[[nodiscard]] PspReport psp_probe(const QuadraticRing &R,
                                  const std::vector<RingElement> &coefficients);

/// Holds iff every tuple has (x_1, ..., x_n)_v = R or a common non-unit
/// divisor. FailsWith(tuple). Throws PreconditionUnmet for zero entries.
[[nodiscard]] ElementVerdict
property_P_check(const QuadraticRing &R, const std::vector<std::vector<RingElement>> &tuples);

struct StarFim {
  Monoid monoid;
  /// ideals[i] is the ideal behind window element i.
  std::vector<FractionalIdeal> ideals;
  /// FailsWith(H, K) where the window glb differs from t(H + K).
  IdealVerdict inf_is_t_sum;
};

/// Integral t-ideals of norm <= bound under t-multiplication, ordered by
/// reverse containment, as an IdealAdapter table.
[[nodiscard]] StarFim export_star_fim(const QuadraticRing &R, Int norm_bound);

struct SchreierReport {
  std::size_t size = 0;
  std::vector<FractionalIdeal> ideals;
  Verdict all_primal;
  IdealVerdict all_principal;
  /// all-principal implies all-primal.
  bool consistent = false;
};
/// The monoid of integral t-invertible t-ideals of norm <= bound.
[[nodiscard]] SchreierReport schreier_probe(const QuadraticRing &R, Int norm_bound);

} // namespace ordalg
