#pragma once

// Riesz interpolation in a monoid window and in its group of differences.

#include "ordalg/monoid.hpp"
#include "ordalg/order.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ordalg {

/// Formal difference pos - neg.
struct GroupElement {
  Element pos;
  Element neg;
  bool operator==(const GroupElement &) const = default;
};

struct EquationCheck {
  std::string equation;
  bool holds = false;
};

struct InterpolationWitness {
  std::variant<Element, GroupElement> z;
  /// Named intermediate values in the order they were derived.
  std::vector<std::pair<std::string, Element>> derivation;
  std::vector<EquationCheck> checks;
  /// "search", "constructive", "fold", "split" or "cone-search".
  std::string path;
  /// One line per (2,2) step of an (n,m) reduction.
  std::vector<std::string> reductions;

  [[nodiscard]] bool all_checks_hold() const {
    for (const auto &c : checks)
      if (!c.holds) return false;
    return true;
  }
  [[nodiscard]] const Element &element() const { return std::get<Element>(z); }
  [[nodiscard]] const GroupElement &group_element() const {
    return std::get<GroupElement>(z);
  }
  [[nodiscard]] const Element *find(const std::string &name) const {
    for (const auto &[k, v] : derivation)
      if (k == name) return &v;
    return nullptr;
  }
};

struct NoInterpolant {
  std::string reason;
};

enum class InterpolationMode { Search, Constructive };

using InterpolationResult = std::variant<InterpolationWitness, NoInterpolant>;

/// z with a, b <= z <= x, y. Search scans the window in canonical order;
/// Constructive splits b across x1 + a and then b1 across y1 + a1 (x = x1 + a,
/// y = y1 + a, ...) and returns z = a1' + b with every equation re-checked.
/// Throws PreconditionUnmet unless a, b <= x, y and PrimalWitnessUnavailable
/// when a required split does not exist.
[[nodiscard]] InterpolationResult interpolate_22(const Monoid &m, const Element &a,
                                                 const Element &b, const Element &x,
                                                 const Element &y,
                                                 InterpolationMode mode);

/// d with As <= d <= Bs by repeated (2,2) steps: first over the upper
/// elements, then folding the lower ones. A single lower and upper element
/// give d = a.
[[nodiscard]] InterpolationResult
interpolate_nm(const Monoid &m, const std::vector<Element> &As,
               const std::vector<Element> &Bs,
               InterpolationMode mode = InterpolationMode::Search);

// ---- group of differences

class GroupContext {
public:
  /// Throws HypothesisUnmet unless the window is cancellative and conic.
  explicit GroupContext(Monoid m);

  [[nodiscard]] const Monoid &monoid() const { return m_; }

  [[nodiscard]] GroupElement embed(const Element &x) const;
  [[nodiscard]] GroupElement zero() const;
  /// Cross-sum equality; nullopt when both cross sums leave the window.
  [[nodiscard]] std::optional<bool> equal(const GroupElement &u,
                                          const GroupElement &v) const;
  [[nodiscard]] std::optional<GroupElement> add(const GroupElement &u,
                                                const GroupElement &v) const;
  [[nodiscard]] GroupElement negate(const GroupElement &u) const;
  /// u <= v iff u.pos + v.neg + h = v.pos + u.neg for some h in the monoid.
  [[nodiscard]] std::optional<bool> leq(const GroupElement &u,
                                        const GroupElement &v) const;
  /// The h with u + h = v when u <= v.
  [[nodiscard]] std::optional<Element> cone_difference(const GroupElement &u,
                                                       const GroupElement &v) const;
  /// u + h for a monoid element h.
  [[nodiscard]] std::optional<GroupElement> shift(const GroupElement &u,
                                                  const Element &h) const;

  /// Backend normal form: integer difference, integer vector or reduced
  /// fraction (numerator, denominator). Empty for other backends.
  [[nodiscard]] std::optional<std::vector<std::int64_t>>
  normal_form(const GroupElement &u) const;
  [[nodiscard]] bool has_normal_form() const;
  /// Whether a normal form lies in the positive cone; empty without normal forms.
  [[nodiscard]] std::optional<bool> in_cone(const std::vector<std::int64_t> &nf) const;
  /// Normal form of the sum of `terms`; empty without normal forms.
  [[nodiscard]] std::optional<std::vector<std::int64_t>>
  normal_sum(const std::vector<GroupElement> &terms) const;

  [[nodiscard]] std::string render(const GroupElement &u) const;

private:
  Monoid m_;
};

using GroupInterpolationResult =
    std::variant<InterpolationWitness, NoInterpolant, WindowInconclusive>;

/// z with p, q <= z <= r, s. Derives a, b, c, d from r = p + a, s = p + c,
/// r = q + d, s = q + b, finds a = a' + a'', b = b' + b'', c = a' + b',
/// d = a'' + b'' and returns p + a' (path "split"); falls back to scanning
/// z = p + h (path "cone-search"). Throws PreconditionUnmet unless
/// p, q <= r, s.
[[nodiscard]] GroupInterpolationResult
group_interpolate(const GroupContext &g, const GroupElement &p, const GroupElement &q,
                  const GroupElement &r, const GroupElement &s);

/// Group elements u - v for u, v among the first `base` window elements,
/// one per equality class, in order of first appearance.
[[nodiscard]] std::vector<GroupElement> group_sample(const GroupContext &g,
                                                     std::size_t base);

struct GroupSweepReport {
  /// FailsWith(p, q, r, s) rendered as monoid pairs (pos, neg, ...).
  Verdict verdict;
  std::size_t quadruples = 0;
  std::size_t split_path = 0;
  std::size_t cone_path = 0;
  std::size_t no_interpolant = 0;
  std::size_t derivation_failures = 0;
  /// Split-path success agrees with exhaustive cone search on every quadruple.
  bool modes_agree = true;
  std::optional<std::vector<GroupElement>> first_no_interpolant;
};

/// Every quadruple p, q <= r, s over group_sample(g, base).
[[nodiscard]] GroupSweepReport sweep_group_interpolation(const GroupContext &g,
                                                         std::size_t base);

// ---- equivalence sweeps

/// FailsWith(x): first element that is not primal.
[[nodiscard]] Verdict check_all_primal(const Monoid &m);
/// FailsWith(a, b, x, y): a, b <= x, y with no z between.
[[nodiscard]] Verdict check_interpolation_22(const Monoid &m);
/// Exhaustive (n, m) interpolation for 1 <= n, m <= max_arity over distinct
/// elements. FailsWith(lower..., upper...).
[[nodiscard]] Verdict check_interpolation_nm(const Monoid &m, unsigned max_arity);
/// Constructive and Search modes agree on feasibility for every in-window
/// quadruple, and every constructive witness re-verifies.
[[nodiscard]] Verdict check_interpolation_modes_agree(const Monoid &m);

struct EquivalenceReport {
  Verdict all_primal;
  Verdict interpolation_22;
  Verdict interpolation_nm;
  Verdict pre_riesz;
  Verdict conic;
  /// The three interpolation conditions have identical status.
  bool equivalence_holds = false;
  /// all-primal => pre-Riesz and conic.
  bool implications_hold = false;
};

/// Throws HypothesisUnmet unless the window is cancellative and
/// divisibility ordered.
[[nodiscard]] EquivalenceReport check_riesz_monoid(const Monoid &m,
                                                   unsigned max_arity = 3);

} // namespace ordalg
