#pragma once

// Finitely described commutative partially ordered monoids.
//
// Every instance enumerates a finite window of its (usually infinite) monoid
// in a deterministic canonical order. Elements are addressed either by value
// (`Element`) or by their position in that order (`ElemId`). Sums that leave
// the window are reported as such and never truncated.

#include "ordalg/bitset.hpp"
#include "ordalg/element.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ordalg {

enum class Backend {
  NaturalAdd,
  NumericalSemigroup,
  BlockMonoid,
  FreeCommutative,
  PositiveIntegersMul,
  Table,
  IdealAdapter,
};

[[nodiscard]] const char *to_string(Backend b);

/// Marker returned when a sum exceeds the enumeration window.
struct OutOfWindow {
  bool operator==(const OutOfWindow &) const = default;
};

/// Marker returned when a window-bounded answer cannot be certified.
struct WindowInconclusive {
  std::string reason;
};

/// Explicit operation table. `add[i][j]` is empty when the sum is outside the
/// window; `leq[i][j]` is the declared order.
struct TableSpec {
  std::vector<std::string> names;
  std::vector<std::vector<std::optional<std::size_t>>> add;
  std::vector<std::vector<bool>> leq;
};

class Monoid {
public:
  static Monoid natural_add(std::uint64_t cap);
  /// Generators are normalised by their gcd; the window cap applies to the
  /// normalised semigroup.
  static Monoid numerical_semigroup(std::vector<std::uint64_t> generators,
                                    std::uint64_t cap);
  static Monoid block_monoid(std::uint32_t modulus, std::uint32_t max_length);
  static Monoid free_commutative(std::uint32_t rank, std::uint32_t max_l1);
  static Monoid positive_mul(std::uint64_t cap);
  /// Validates the table (identity, commutativity, associativity, order
  /// axioms and compatibility) and throws InvariantViolation on failure.
  static Monoid table(TableSpec spec, Backend kind = Backend::Table,
                      std::string label = {});

  [[nodiscard]] Backend backend() const;
  /// Short identifier such as "ns:2,3@40".
  [[nodiscard]] std::string id() const;
  [[nodiscard]] std::uint64_t window() const;
  [[nodiscard]] std::size_t size() const;

  [[nodiscard]] const std::vector<Element> &elements() const;
  [[nodiscard]] const Element &element(ElemId id) const;
  /// Throws BackendMismatch for a payload of the wrong kind and NotInWindow
  /// for a well-formed element outside the window.
  [[nodiscard]] ElemId id_of(const Element &e) const;
  [[nodiscard]] std::optional<ElemId> find(const Element &e) const;
  [[nodiscard]] bool contains(const Element &e) const {
    return find(e).has_value();
  }

  [[nodiscard]] ElemId identity() const;
  /// x != 0 and 0 <= x.
  [[nodiscard]] bool is_strictly_positive(ElemId x) const;
  [[nodiscard]] std::vector<ElemId> positive_ids() const;
  [[nodiscard]] const DynBitset &positive_set() const;
  /// Number of unordered pairs {a, b} whose sum leaves the window.
  [[nodiscard]] std::size_t out_of_window_pairs() const;

  [[nodiscard]] std::optional<ElemId> sum(ElemId a, ElemId b) const;
  /// Declared order.
  [[nodiscard]] bool leq(ElemId a, ElemId b) const;
  /// Backend-native divisibility (membership of b - a, multiset containment,
  /// integer divisibility, or the table's sum relation).
  [[nodiscard]] bool divides(ElemId a, ElemId b) const;
  /// Generic divisibility: some window x has a + x = b.
  [[nodiscard]] bool divides_by_sum(ElemId a, ElemId b) const;
  /// First (canonical) x with a + x = b.
  [[nodiscard]] std::optional<ElemId> cofactor(ElemId a, ElemId b) const;

  [[nodiscard]] const DynBitset &lower_set(ElemId x) const;
  [[nodiscard]] const DynBitset &upper_set(ElemId x) const;
  /// Lower set of x in canonical order.
  [[nodiscard]] const std::vector<ElemId> &divisors(ElemId x) const;
  /// Pairs (u, v), u <= v by id, with u + v = x.
  [[nodiscard]] std::vector<std::pair<ElemId, ElemId>>
  decompositions(ElemId x) const;

  [[nodiscard]] std::variant<Element, OutOfWindow> add(const Element &a,
                                                       const Element &b) const;
  [[nodiscard]] bool divides(const Element &a, const Element &b) const;
  [[nodiscard]] bool leq(const Element &a, const Element &b) const {
    return leq(id_of(a), id_of(b));
  }

  /// Strictly positive elements with no decomposition into two strictly
  /// positive window elements.
  [[nodiscard]] std::vector<Element> atoms() const;

  [[nodiscard]] std::string render(ElemId id) const;
  [[nodiscard]] std::string render(const Element &e) const;
  /// Accepts the rendering with or without its backend prefix.
  [[nodiscard]] Element parse_element(std::string_view text) const;

  // Backend parameters (meaningful only for the matching backend).
  [[nodiscard]] const std::vector<std::uint64_t> &generators() const;
  [[nodiscard]] std::uint64_t generator_gcd() const;
  [[nodiscard]] std::uint32_t modulus() const;
  [[nodiscard]] std::uint32_t rank() const;
  [[nodiscard]] const std::vector<std::string> &table_names() const;
  [[nodiscard]] const std::string &label() const;

  struct Impl;

private:
  explicit Monoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Membership in the numerical semigroup generated by `generators`, by
/// dynamic programming up to n.
[[nodiscard]] bool semigroup_member(const std::vector<std::uint64_t> &generators,
                                    std::uint64_t n);

} // namespace ordalg
