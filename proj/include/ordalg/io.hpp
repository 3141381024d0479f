#pragma once

// JSON documents for monoid instances, quadratic rings and ideals.

#include "ordalg/monoid.hpp"
#include "ordalg/quadratic.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ordalg {

/// {"backend": ..., backend fields, "window": N}. Table documents carry
/// "elements", "add" (index or null) and "leq". Throws SchemaError.
[[nodiscard]] Monoid load_monoid(const nlohmann::json &doc);
[[nodiscard]] Monoid load_monoid_file(const std::string &path);
[[nodiscard]] nlohmann::json monoid_to_json(const Monoid &m);

/// {"d": int, "form": "maximal" | "sqrt_order"}
[[nodiscard]] QuadraticRing ring_from_json(const nlohmann::json &doc);
[[nodiscard]] nlohmann::json ring_to_json(const QuadraticRing &R);
/// Accepts "d=-5", "d=-3:sqrt" or a ring JSON document.
[[nodiscard]] QuadraticRing parse_ring(const std::string &text);

/// {"gens": [[a, b, den], ...]} or {"basis": [[a, 0], [b, c]], "den": n}.
[[nodiscard]] FractionalIdeal ideal_from_json(const QuadraticRing &R,
                                              const nlohmann::json &doc);
[[nodiscard]] nlohmann::json ideal_to_json(const FractionalIdeal &I);
/// Accepts a JSON document or the shorthand "gens=[[a,b,den],...]".
[[nodiscard]] FractionalIdeal parse_ideal(const QuadraticRing &R, const std::string &text);

[[nodiscard]] nlohmann::json element_to_json(const RingElement &x);
/// [a, b] or the text form "a+bw".
[[nodiscard]] RingElement element_from_json(const nlohmann::json &doc);

[[nodiscard]] nlohmann::json read_json_file(const std::string &path);
void write_json_file(const std::string &path, const nlohmann::json &doc);

} // namespace ordalg
