#pragma once

// Built-in instances and instance resolution for the command line.

#include "ordalg/monoid.hpp"
#include "ordalg/quadratic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ordalg {

struct Instance {
  /// "ns:2,3@40", "fim:d=-5@36", ...
  std::string id;
  Monoid monoid;
  /// Set for monoids of t-ideals; ideals[i] is window element i.
  std::optional<QuadraticRing> ring;
  Int norm_bound = 0;
  std::vector<FractionalIdeal> ideals;
};

struct CatalogEntry {
  std::string name;
  std::uint64_t default_window = 0;
  std::string description;
};

/// nat, fc:2, mul, ns:2,3, bm:3, fim:-5.
[[nodiscard]] const std::vector<CatalogEntry> &catalog();

/// Resolves "name", "name@N" (N overrides the default window) or a path to a
/// monoid JSON document. `window` overrides both. Throws SchemaError.
[[nodiscard]] Instance load_instance(const std::string &spec,
                                     std::optional<std::uint64_t> window = {});

} // namespace ordalg
