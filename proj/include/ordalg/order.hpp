#pragma once

// Element-level order theory over a monoid window: bounds, primality,
// rigidity, homogeneity, the pre-Riesz property and bases.

#include "ordalg/monoid.hpp"
#include "ordalg/verdict.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ordalg {

using Verdict = BasicVerdict<Element>;

// ---- bounds

[[nodiscard]] DynBitset common_lower_set(const Monoid &m,
                                         const std::vector<ElemId> &xs);
[[nodiscard]] std::vector<Element>
common_lower_bounds(const Monoid &m, const std::vector<Element> &xs);

/// The greatest member of a set given as a bitset, if there is one.
[[nodiscard]] std::optional<ElemId> greatest_of(const Monoid &m,
                                                const DynBitset &set);
[[nodiscard]] std::optional<ElemId> glb_id(const Monoid &m,
                                           const std::vector<ElemId> &xs);
[[nodiscard]] std::optional<Element> glb(const Monoid &m,
                                         const std::vector<Element> &xs);

using UpperBounds = std::variant<std::vector<Element>, WindowInconclusive>;
[[nodiscard]] std::vector<ElemId> minimal_upper_bound_ids(const Monoid &m,
                                                          ElemId a, ElemId b);
/// Minimal common upper bounds; inconclusive when a + b leaves the window.
[[nodiscard]] UpperBounds minimal_upper_bounds(const Monoid &m, const Element &a,
                                               const Element &b);

// ---- structural checks

/// FailsWith(a, b, c) for a + b = a + c with b != c.
[[nodiscard]] Verdict check_cancellative(const Monoid &m);
/// FailsWith(x, y) for non-identity x, y with x + y = 0.
[[nodiscard]] Verdict check_conic(const Monoid &m);
/// Declared order against "a + x = b for some window x". FailsWith(a, b).
[[nodiscard]] Verdict check_divisibility_order(const Monoid &m);

// ---- element predicates

/// FailsWith(y1, y2): x <= y1 + y2 admits no split x = x1 + x2 with x1 <= y1,
/// x2 <= y2. Pairs whose sum leaves the window are counted as unchecked.
[[nodiscard]] Verdict is_primal(const Monoid &m, ElemId x);
[[nodiscard]] Verdict is_primal(const Monoid &m, const Element &x);
/// FailsWith(d): the first divisor of x that is not primal.
[[nodiscard]] Verdict is_completely_primal(const Monoid &m, const Element &x);
/// FailsWith(s, t): incomparable divisors. Throws IdentityInput.
[[nodiscard]] Verdict is_rigid(const Monoid &m, ElemId r);
[[nodiscard]] Verdict is_rigid(const Monoid &m, const Element &r);
/// FailsWith(R, S): positive divisors with no positive common lower bound.
/// Throws IdentityInput.
[[nodiscard]] Verdict is_homogeneous(const Monoid &m, ElemId h);
[[nodiscard]] Verdict is_homogeneous(const Monoid &m, const Element &h);
/// Power conditions on q with n ranging over 1..nmax (n·q is the n-fold
/// sum): q is below some n·r for every divisor r, the divisors of each n·q
/// form a chain, and every divisor of n·q is primal. Failures yield
/// FailsWith(r), FailsWith(r, s) and FailsWith(t) respectively. Throws
/// IdentityInput.
[[nodiscard]] Verdict is_prime_quantum(const Monoid &m, const Element &q,
                                       unsigned nmax);
[[nodiscard]] bool are_disjoint(const Monoid &m, ElemId x, ElemId y);
[[nodiscard]] bool are_disjoint(const Monoid &m, const Element &x,
                                const Element &y);

/// Upper directedness on pairs plus, for every set of 2..max_arity distinct
/// strictly positive elements, "glb is the identity or a strictly positive
/// common lower bound exists". An undefined glb fails the first disjunct.
[[nodiscard]] Verdict check_pre_riesz(const Monoid &m, unsigned max_arity);

// ---- disjoint families and bases

struct ExceedsCap {
  std::size_t found = 0;
  bool operator==(const ExceedsCap &) const = default;
};
using DisjointBound = std::variant<std::size_t, ExceedsCap>;

/// Largest pairwise-disjoint family of strictly positive elements below x.
[[nodiscard]] DisjointBound conrad_F_bound(const Monoid &m, const Element &x,
                                           std::size_t cap);
/// Same, restricted to members of `pool` (a bitset over the window).
[[nodiscard]] DisjointBound max_disjoint_below(const Monoid &m, ElemId x,
                                               const DynBitset &pool,
                                               std::size_t cap);

/// Bitset of strictly positive homogeneous window elements.
[[nodiscard]] DynBitset homogeneous_set(const Monoid &m);

struct NoBasis {
  Element witness;
};

struct BasisResult {
  std::variant<std::vector<Element>, NoBasis> basis;
  bool certified = false;
  Verdict certification;

  [[nodiscard]] bool found() const {
    return std::holds_alternative<std::vector<Element>>(basis);
  }
  [[nodiscard]] const std::vector<Element> &members() const {
    return std::get<std::vector<Element>>(basis);
  }
};

/// NoBasis when some strictly positive element exceeds no homogeneous
/// element; otherwise a greedy independent set in canonical order, certified
/// by verify_basis.
[[nodiscard]] BasisResult find_basis(const Monoid &m);

/// Replacement criterion: S pairwise disjoint, and no s in S can be swapped
/// for two distinct elements x, y of (window \ S) ∪ {s} keeping the set
/// pairwise disjoint. FailsWith(s1, s2) for a non-disjoint pair of S and
/// FailsWith(s, x, y) for a replacement. Candidates x, y range over strictly
/// positive elements.
[[nodiscard]] Verdict verify_basis(const Monoid &m, const std::vector<Element> &S);

/// The three equivalent finiteness conditions on disjoint families:
/// (i) the F-condition, (ii) at least one and boundedly many disjoint
/// homogeneous elements below each positive element, (iii) the same for a
/// family gamma (default: all homogeneous elements). "Finite" means at most
/// `cap` on the window.
struct DisjointnessReport {
  Verdict f_condition;
  Verdict homogeneous_form;
  Verdict gamma_form;
  bool default_gamma = true;
  /// (i) <=> (ii), (iii) => (i), and (ii) <=> (iii) for the default gamma.
  bool contract_holds = false;
};
[[nodiscard]] DisjointnessReport
check_disjointness_equivalence(const Monoid &m,
                               const std::optional<std::vector<Element>> &gamma = {},
                               std::size_t cap = 64);

/// Whether a + b is a least / minimal upper bound of {a, b}, next to
/// glb(a, b) = 0. Requires a cancellative, divisibility-ordered, pre-Riesz
/// window (HypothesisUnmet otherwise); a, b strictly positive with a + b in
/// the window (PreconditionUnmet otherwise).
struct SumBoundReport {
  bool glb_zero = false;
  bool minimal = false;
  bool least = false;
  /// glb_zero <=> minimal
  bool minimal_reading_holds = false;
  /// glb_zero <=> least
  bool least_reading_holds = false;
};
[[nodiscard]] SumBoundReport check_sum_upper_bound(const Monoid &m,
                                                   const Element &a,
                                                   const Element &b);
/// Same without re-running the hypothesis checks (callers that already did).
[[nodiscard]] SumBoundReport sum_upper_bound_unchecked(const Monoid &m, ElemId a,
                                                       ElemId b);

/// n-fold sum of x, or nullopt if some partial sum leaves the window.
[[nodiscard]] std::optional<ElemId> multiple(const Monoid &m, ElemId x,
                                             unsigned n);

/// Convert a list of ids into elements.
[[nodiscard]] std::vector<Element> to_elements(const Monoid &m,
                                               const std::vector<ElemId> &ids);

} // namespace ordalg
