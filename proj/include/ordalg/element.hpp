#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ordalg {

/// Exponent vector of a free commutative monoid.
struct ExponentVector {
  std::vector<std::uint32_t> exps;
  auto operator<=>(const ExponentVector &) const = default;
};

/// Multiset of residues mod n (kept sorted) for block monoids.
struct ZeroSumSequence {
  std::vector<std::uint32_t> residues;
  auto operator<=>(const ZeroSumSequence &) const = default;
};

/// Index into a table-described monoid (tables and ideal adapters).
struct Handle {
  std::size_t index = 0;
  auto operator<=>(const Handle &) const = default;
};

/// A monoid element. The payload kind depends on the backend:
/// scalars serve NaturalAdd, NumericalSemigroup and PositiveIntegersMul.
class Element {
public:
  using Payload =
      std::variant<std::uint64_t, ExponentVector, ZeroSumSequence, Handle>;

  Element() = default;
  Element(std::uint64_t n) : payload_(n) {} // NOLINT(implicit)
  Element(int n) : payload_(static_cast<std::uint64_t>(n)) {} // NOLINT
  Element(ExponentVector v) : payload_(std::move(v)) {}       // NOLINT
  Element(ZeroSumSequence s) : payload_(std::move(s)) {}      // NOLINT
  Element(Handle h) : payload_(h) {}                          // NOLINT

  static Element vec(std::vector<std::uint32_t> exps) {
    return Element(ExponentVector{std::move(exps)});
  }
  static Element seq(std::vector<std::uint32_t> residues);

  [[nodiscard]] const Payload &payload() const { return payload_; }

  [[nodiscard]] bool is_scalar() const {
    return std::holds_alternative<std::uint64_t>(payload_);
  }
  [[nodiscard]] std::uint64_t scalar() const {
    return std::get<std::uint64_t>(payload_);
  }

  auto operator<=>(const Element &) const = default;
  bool operator==(const Element &) const = default;

private:
  Payload payload_;
};

/// Index of an element in its monoid's canonical enumeration.
using ElemId = std::uint32_t;

} // namespace ordalg
