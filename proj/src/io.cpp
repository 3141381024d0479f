#include "ordalg/io.hpp"

#include "ordalg/error.hpp"

#include <fstream>
#include <sstream>

namespace ordalg {

using nlohmann::json;

namespace {

const json &field(const json &doc, const char *key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

template <class T> T get_as(const json &v, const char *what) {
  try {
    return v.get<T>();
  } catch (const json::exception &e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

std::uint64_t positive(const json &doc, const char *key) {
  const json &v = field(doc, key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0)
    throw SchemaError(std::string("'") + key + "' must be a positive integer");
  return v.get<std::uint64_t>();
}

} // namespace

Monoid load_monoid(const json &doc) {
  if (!doc.is_object()) throw SchemaError("monoid document must be an object");
  auto backend = get_as<std::string>(field(doc, "backend"), "backend");
  if (backend == "table" || backend == "ideal_adapter") {
    TableSpec spec;
    spec.names = get_as<std::vector<std::string>>(field(doc, "elements"), "elements");
    const json &add = field(doc, "add");
    if (!add.is_array()) throw SchemaError("'add' must be a matrix");
    for (const auto &row : add) {
      if (!row.is_array()) throw SchemaError("'add' rows must be arrays");
      std::vector<std::optional<std::size_t>> r;
      for (const auto &cell : row) {
        if (cell.is_null()) r.emplace_back();
        else if (cell.is_number_integer() && cell.get<std::int64_t>() >= 0)
          r.emplace_back(cell.get<std::size_t>());
        else throw SchemaError("'add' entries must be indices or null");
      }
      spec.add.push_back(std::move(r));
    }
    spec.leq = get_as<std::vector<std::vector<bool>>>(field(doc, "leq"), "leq");
    std::string label = doc.contains("label") ? get_as<std::string>(doc.at("label"), "label") : "";
    return Monoid::table(std::move(spec),
                         backend == "table" ? Backend::Table : Backend::IdealAdapter,
                         std::move(label));
  }
  std::uint64_t window = positive(doc, "window");
  if (backend == "natural_add") return Monoid::natural_add(window);
  if (backend == "positive_mul") return Monoid::positive_mul(window);
  if (backend == "numerical_semigroup") {
    auto gens = get_as<std::vector<std::uint64_t>>(field(doc, "generators"), "generators");
    return Monoid::numerical_semigroup(std::move(gens), window);
  }
  if (backend == "block_monoid") {
    const char *key = doc.contains("modulus") ? "modulus" : "n";
    return Monoid::block_monoid(static_cast<std::uint32_t>(positive(doc, key)),
                                static_cast<std::uint32_t>(window));
  }
  if (backend == "free_commutative")
    return Monoid::free_commutative(static_cast<std::uint32_t>(positive(doc, "rank")),
                                    static_cast<std::uint32_t>(window));
  throw SchemaError("unknown backend '" + backend + "'");
}

Monoid load_monoid_file(const std::string &path) { return load_monoid(read_json_file(path)); }

json monoid_to_json(const Monoid &m) {
  json doc;
  switch (m.backend()) {
  case Backend::NaturalAdd: doc["backend"] = "natural_add"; break;
  case Backend::PositiveIntegersMul: doc["backend"] = "positive_mul"; break;
  case Backend::NumericalSemigroup:
    doc["backend"] = "numerical_semigroup";
    doc["generators"] = m.generators();
    break;
  case Backend::BlockMonoid:
    doc["backend"] = "block_monoid";
    doc["modulus"] = m.modulus();
    break;
  case Backend::FreeCommutative:
    doc["backend"] = "free_commutative";
    doc["rank"] = m.rank();
    break;
  case Backend::Table:
  case Backend::IdealAdapter: {
    doc["backend"] = m.backend() == Backend::Table ? "table" : "ideal_adapter";
    if (!m.label().empty()) doc["label"] = m.label();
    doc["elements"] = m.table_names();
    json add = json::array(), leq = json::array();
    for (ElemId i = 0; i < m.size(); ++i) {
      json ar = json::array(), lr = json::array();
      for (ElemId j = 0; j < m.size(); ++j) {
        auto s = m.sum(i, j);
        ar.push_back(s ? json(*s) : json(nullptr));
        lr.push_back(m.leq(i, j));
      }
      add.push_back(std::move(ar));
      leq.push_back(std::move(lr));
    }
    doc["add"] = std::move(add);
    doc["leq"] = std::move(leq);
    return doc;
  }
  }
  doc["window"] = m.window();
  return doc;
}

QuadraticRing ring_from_json(const json &doc) {
  if (!doc.is_object()) throw SchemaError("ring document must be an object");
  auto d = get_as<Int>(field(doc, "d"), "d");
  OrderForm form = OrderForm::Maximal;
  if (doc.contains("form")) {
    auto f = get_as<std::string>(doc.at("form"), "form");
    if (f == "sqrt_order") form = OrderForm::SqrtOrder;
    else if (f != "maximal") throw SchemaError("unknown order form '" + f + "'");
  }
  return QuadraticRing(d, form);
}

json ring_to_json(const QuadraticRing &R) {
  return {{"d", R.d()}, {"form", R.conductor() == 1 ? "maximal" : "sqrt_order"}};
}

QuadraticRing parse_ring(const std::string &text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return ring_from_json(json::parse(text));
    } catch (const json::parse_error &e) {
      throw SchemaError(std::string("ring document: ") + e.what());
    }
  }
  return QuadraticRing::parse(text);
}

FractionalIdeal ideal_from_json(const QuadraticRing &R, const json &doc) {
  if (!doc.is_object()) throw SchemaError("ideal document must be an object");
  if (doc.contains("gens")) {
    std::vector<FieldElement> gens;
    for (const auto &g : doc.at("gens")) {
      auto v = get_as<std::vector<Int>>(g, "generator");
      if (v.size() != 2 && v.size() != 3)
        throw SchemaError("generators are [a, b] or [a, b, den]");
      gens.push_back({v[0], v[1], v.size() == 3 ? v[2] : 1});
    }
    return FractionalIdeal::from_generators(R, gens);
  }
  auto basis = get_as<std::vector<std::vector<Int>>>(field(doc, "basis"), "basis");
  if (basis.size() != 2 || basis[0].size() != 2 || basis[1].size() != 2 || basis[0][1] != 0)
    throw SchemaError("basis must be [[a, 0], [b, c]]");
  Int den = doc.contains("den") ? get_as<Int>(doc.at("den"), "den") : 1;
  return FractionalIdeal::from_hermite(R, basis[0][0], basis[1][0], basis[1][1], den);
}

json ideal_to_json(const FractionalIdeal &I) {
  return {{"basis", {{I.a(), 0}, {I.b(), I.c()}}}, {"den", I.den()}};
}

FractionalIdeal parse_ideal(const QuadraticRing &R, const std::string &text) {
  std::string body = text;
  if (body.rfind("gens=", 0) == 0) body = "{\"gens\":" + body.substr(5) + "}";
  try {
    return ideal_from_json(R, json::parse(body));
  } catch (const json::parse_error &e) {
    throw SchemaError("ideal literal '" + text + "': " + e.what());
  }
}

json element_to_json(const RingElement &x) { return {x.a, x.b}; }

RingElement element_from_json(const json &doc) {
  if (doc.is_string()) return parse_ring_element(doc.get<std::string>());
  auto v = get_as<std::vector<Int>>(doc, "ring element");
  if (v.size() != 2) throw SchemaError("ring elements are [a, b]");
  return {v[0], v[1]};
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw SchemaError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string &path, const json &doc) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

} // namespace ordalg
