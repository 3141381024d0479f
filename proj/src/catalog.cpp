#include "ordalg/catalog.hpp"

#include "ordalg/error.hpp"
#include "ordalg/io.hpp"
#include "ordalg/star.hpp"

#include <charconv>
#include <filesystem>

namespace ordalg {

namespace {

std::uint64_t parse_u64(std::string_view s, const std::string &context) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
    throw SchemaError("bad number '" + std::string(s) + "' in '" + context + "'");
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s, const std::string &context) {
  std::vector<std::uint64_t> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.push_back(parse_u64(s.substr(0, comma), context));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.empty()) throw SchemaError("empty list in '" + context + "'");
  return out;
}

Instance plain(Monoid m) {
  std::string id = m.id();
  return Instance{std::move(id), std::move(m), std::nullopt, 0, {}};
}

} // namespace

const std::vector<CatalogEntry> &catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"nat", 40, "natural numbers under addition"},
      {"fc:2", 6, "free commutative monoid of rank 2, exponent vectors by L1 norm"},
      {"mul", 50, "positive integers under multiplication"},
      {"ns:2,3", 40, "numerical semigroup generated by 2 and 3"},
      {"bm:3", 9, "zero-sum sequences over Z/3 by length"},
      {"fim:-5", 36, "integral t-ideals of Z[sqrt(-5)] under t-multiplication, by norm"},
  };
  return entries;
}

Instance load_instance(const std::string &spec, std::optional<std::uint64_t> window) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    if (!std::filesystem::exists(spec)) throw SchemaError("no such file '" + spec + "'");
    if (window) throw SchemaError("--window does not apply to JSON documents");
    return plain(load_monoid_file(spec));
  }
  std::string name = spec;
  std::optional<std::uint64_t> w = window;
  if (auto at = spec.rfind('@'); at != std::string::npos) {
    name = spec.substr(0, at);
    if (!w) w = parse_u64(std::string_view(spec).substr(at + 1), spec);
  }
  auto colon = name.find(':');
  std::string kind = name.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
  auto default_window = [&](std::uint64_t fallback) {
    for (const auto &e : catalog())
      if (e.name == name) return e.default_window;
    return fallback;
  };
  std::uint64_t win = w.value_or(0);

  if (kind == "nat") return plain(Monoid::natural_add(w ? win : default_window(40)));
  if (kind == "mul") return plain(Monoid::positive_mul(w ? win : default_window(50)));
  if (kind == "ns")
    return plain(Monoid::numerical_semigroup(parse_list(arg, spec), w ? win : default_window(40)));
  if (kind == "bm")
    return plain(Monoid::block_monoid(static_cast<std::uint32_t>(parse_u64(arg, spec)),
                                      static_cast<std::uint32_t>(w ? win : default_window(9))));
  if (kind == "fc")
    return plain(Monoid::free_commutative(static_cast<std::uint32_t>(parse_u64(arg, spec)),
                                          static_cast<std::uint32_t>(w ? win : default_window(6))));
  if (kind == "fim") {
    QuadraticRing R = parse_ring(arg);
    Int bound = static_cast<Int>(w ? win : default_window(36));
    StarFim fim = export_star_fim(R, bound);
    std::string id = "fim:" + R.id() + "@" + std::to_string(bound);
    return Instance{id, std::move(fim.monoid), R, bound, std::move(fim.ideals)};
  }
  throw SchemaError("unknown instance '" + spec + "'");
}

} // namespace ordalg
