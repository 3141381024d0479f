#include "ordalg/monoid.hpp"

#include "ordalg/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace ordalg {

namespace {

constexpr std::size_t kSumCacheLimit = 1024;
constexpr std::size_t kAssociativitySweepLimit = 160;

std::string join_numbers(const std::vector<std::uint32_t> &v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::vector<std::uint64_t> parse_numbers(std::string_view body) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    std::uint64_t v = 0;
    auto [ptr, ec] =
        std::from_chars(body.data() + pos, body.data() + body.size(), v);
    if (ec != std::errc{})
      throw SchemaError("cannot parse number in '" + std::string(body) + "'");
    out.push_back(v);
    pos = static_cast<std::size_t>(ptr - body.data());
  }
  return out;
}

} // namespace

const char *to_string(Backend b) {
  switch (b) {
  case Backend::NaturalAdd: return "natural_add";
  case Backend::NumericalSemigroup: return "numerical_semigroup";
  case Backend::BlockMonoid: return "block_monoid";
  case Backend::FreeCommutative: return "free_commutative";
  case Backend::PositiveIntegersMul: return "positive_mul";
  case Backend::Table: return "table";
  case Backend::IdealAdapter: return "ideal_adapter";
  }
  return "unknown";
}

Element Element::seq(std::vector<std::uint32_t> residues) {
  std::sort(residues.begin(), residues.end());
  return Element(ZeroSumSequence{std::move(residues)});
}

bool semigroup_member(const std::vector<std::uint64_t> &generators,
                      std::uint64_t n) {
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (std::uint64_t v = 1; v <= n; ++v)
    for (auto g : generators)
      if (g <= v && reach[v - g]) {
        reach[v] = 1;
        break;
      }
  return reach[n] != 0;
}

struct Monoid::Impl {
  Backend kind = Backend::NaturalAdd;
  std::uint64_t window = 0;
  std::string label;
  std::vector<Element> elements;
  std::map<Element, ElemId> index;
  ElemId identity = 0;

  std::vector<std::uint64_t> gens;
  std::uint64_t gcd = 1;
  std::vector<std::int32_t> value_to_id;
  std::uint32_t modulus = 0;
  std::uint32_t rank = 0;
  std::vector<std::string> names;

  std::vector<std::int32_t> sum_table; // n*n, -1 outside window
  std::vector<DynBitset> lower, upper;
  std::vector<std::vector<ElemId>> divisor_lists;
  DynBitset positive;
  std::size_t oow_pairs = 0;

  [[nodiscard]] std::size_t n() const { return elements.size(); }

  [[nodiscard]] bool is_catalog() const {
    return kind != Backend::Table && kind != Backend::IdealAdapter;
  }

  [[nodiscard]] std::optional<ElemId> lookup(const Element &e) const {
    auto it = index.find(e);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::optional<ElemId> compute_sum(ElemId a, ElemId b) const {
    if (!sum_table.empty()) {
      auto s = sum_table[static_cast<std::size_t>(a) * n() + b];
      if (s < 0) return std::nullopt;
      return static_cast<ElemId>(s);
    }
    const Element &ea = elements[a];
    const Element &eb = elements[b];
    switch (kind) {
    case Backend::NaturalAdd:
    case Backend::NumericalSemigroup: {
      std::uint64_t s = ea.scalar() + eb.scalar();
      if (s > window) return std::nullopt;
      auto id = value_to_id[s];
      if (id < 0) return std::nullopt;
      return static_cast<ElemId>(id);
    }
    case Backend::PositiveIntegersMul: {
      std::uint64_t x = ea.scalar();
      std::uint64_t y = eb.scalar();
      if (y != 0 && x > window / y) return std::nullopt;
      std::uint64_t p = x * y;
      if (p > window) return std::nullopt;
      return static_cast<ElemId>(p - 1);
    }
    case Backend::BlockMonoid: {
      const auto &ra = std::get<ZeroSumSequence>(ea.payload()).residues;
      const auto &rb = std::get<ZeroSumSequence>(eb.payload()).residues;
      if (ra.size() + rb.size() > window) return std::nullopt;
      std::vector<std::uint32_t> merged;
      merged.reserve(ra.size() + rb.size());
      std::merge(ra.begin(), ra.end(), rb.begin(), rb.end(),
                 std::back_inserter(merged));
      return lookup(Element(ZeroSumSequence{std::move(merged)}));
    }
    case Backend::FreeCommutative: {
      const auto &va = std::get<ExponentVector>(ea.payload()).exps;
      const auto &vb = std::get<ExponentVector>(eb.payload()).exps;
      std::vector<std::uint32_t> s(va.size());
      std::uint64_t l1 = 0;
      for (std::size_t i = 0; i < va.size(); ++i) {
        s[i] = va[i] + vb[i];
        l1 += s[i];
      }
      if (l1 > window) return std::nullopt;
      return lookup(Element::vec(std::move(s)));
    }
    case Backend::Table:
    case Backend::IdealAdapter:
      break;
    }
    return std::nullopt;
  }

  [[nodiscard]] bool native_leq(ElemId a, ElemId b) const {
    const Element &ea = elements[a];
    const Element &eb = elements[b];
    switch (kind) {
    case Backend::NaturalAdd: return ea.scalar() <= eb.scalar();
    case Backend::NumericalSemigroup: {
      if (ea.scalar() > eb.scalar()) return false;
      return value_to_id[eb.scalar() - ea.scalar()] >= 0;
    }
    case Backend::PositiveIntegersMul: return eb.scalar() % ea.scalar() == 0;
    case Backend::BlockMonoid: {
      const auto &ra = std::get<ZeroSumSequence>(ea.payload()).residues;
      const auto &rb = std::get<ZeroSumSequence>(eb.payload()).residues;
      return std::includes(rb.begin(), rb.end(), ra.begin(), ra.end());
    }
    case Backend::FreeCommutative: {
      const auto &va = std::get<ExponentVector>(ea.payload()).exps;
      const auto &vb = std::get<ExponentVector>(eb.payload()).exps;
      for (std::size_t i = 0; i < va.size(); ++i)
        if (va[i] > vb[i]) return false;
      return true;
    }
    case Backend::Table:
    case Backend::IdealAdapter:
      return lower[b].test(a);
    }
    return false;
  }

  void check_payload_kind(const Element &e) const {
    bool ok = false;
    switch (kind) {
    case Backend::NaturalAdd:
    case Backend::NumericalSemigroup:
    case Backend::PositiveIntegersMul:
      ok = e.is_scalar();
      break;
    case Backend::BlockMonoid:
      ok = std::holds_alternative<ZeroSumSequence>(e.payload());
      break;
    case Backend::FreeCommutative:
      ok = std::holds_alternative<ExponentVector>(e.payload()) &&
           std::get<ExponentVector>(e.payload()).exps.size() == rank;
      break;
    case Backend::Table:
    case Backend::IdealAdapter:
      ok = std::holds_alternative<Handle>(e.payload());
      break;
    }
    if (!ok)
      throw BackendMismatch(std::string("element payload does not belong to a ") +
                            to_string(kind) + " instance");
  }

  // Index, caches, order sets and structural validation.
  void finalize(bool order_from_native) {
    if (elements.empty()) throw InvariantViolation("empty window");
    if (elements.size() > 0xFFFFFFF0U) throw InvariantViolation("window too large");
    for (ElemId i = 0; i < n(); ++i) {
      if (!index.emplace(elements[i], i).second)
        throw InvariantViolation("duplicate element in enumeration");
    }
    if (sum_table.empty() && n() <= kSumCacheLimit) {
      std::vector<std::int32_t> cache(n() * n(), -1);
      for (ElemId a = 0; a < n(); ++a)
        for (ElemId b = 0; b < n(); ++b) {
          auto s = compute_sum(a, b);
          cache[static_cast<std::size_t>(a) * n() + b] =
              s ? static_cast<std::int32_t>(*s) : -1;
        }
      sum_table = std::move(cache);
    }
    if (order_from_native) {
      lower.assign(n(), DynBitset(n()));
      upper.assign(n(), DynBitset(n()));
      for (ElemId a = 0; a < n(); ++a)
        for (ElemId b = 0; b < n(); ++b)
          if (native_leq(a, b)) {
            lower[b].set(a);
            upper[a].set(b);
          }
    }
    divisor_lists.resize(n());
    for (ElemId b = 0; b < n(); ++b) divisor_lists[b] = lower[b].indices();
    validate();
    positive = DynBitset(n());
    for (ElemId x = 0; x < n(); ++x)
      if (x != identity && lower[x].test(identity)) positive.set(x);
    for (ElemId a = 0; a < n(); ++a)
      for (ElemId b = a; b < n(); ++b)
        if (!compute_sum(a, b)) ++oow_pairs;
  }

  void validate() {
    // identity
    if (!is_catalog()) {
      bool found = false;
      for (ElemId e = 0; e < n() && !found; ++e) {
        bool ok = true;
        for (ElemId x = 0; x < n() && ok; ++x) ok = compute_sum(e, x) == x;
        if (ok) {
          identity = e;
          found = true;
        }
      }
      if (!found) throw InvariantViolation("table has no identity element");
    } else {
      for (ElemId x = 0; x < n(); ++x)
        if (compute_sum(identity, x) != x)
          throw InvariantViolation("identity law fails at " + std::to_string(x));
    }
    for (ElemId a = 0; a < n(); ++a)
      for (ElemId b = a + 1; b < n(); ++b)
        if (compute_sum(a, b) != compute_sum(b, a))
          throw InvariantViolation("addition is not commutative");
    const ElemId lim = static_cast<ElemId>(std::min(n(), kAssociativitySweepLimit));
    for (ElemId a = 0; a < lim; ++a)
      for (ElemId b = 0; b < lim; ++b) {
        auto ab = compute_sum(a, b);
        for (ElemId c = 0; c < lim; ++c) {
          auto bc = compute_sum(b, c);
          if (!ab || !bc) continue;
          auto l = compute_sum(*ab, c);
          auto r = compute_sum(a, *bc);
          if (l && r && *l != *r)
            throw InvariantViolation("addition is not associative");
          if (!is_catalog() && (l.has_value() != r.has_value()))
            throw InvariantViolation("associativity leaves the window asymmetrically");
        }
      }
    // order: reflexive, antisymmetric, transitive
    for (ElemId a = 0; a < n(); ++a) {
      if (!lower[a].test(a)) throw InvariantViolation("order is not reflexive");
      for (auto b : upper[a].indices()) {
        if (b != a && upper[b].test(a))
          throw InvariantViolation("order is not antisymmetric");
        if (!upper[b].is_subset_of(upper[a]))
          throw InvariantViolation("order is not transitive");
      }
    }
    // compatibility with the operation
    if (!is_catalog()) {
      for (ElemId a = 0; a < n(); ++a)
        for (auto b : upper[a].indices())
          for (ElemId c = 0; c < n(); ++c) {
            auto ac = compute_sum(a, c);
            auto bc = compute_sum(b, c);
            if (ac && bc && !lower[*bc].test(*ac))
              throw InvariantViolation("order is not compatible with addition");
          }
    }
  }

  [[nodiscard]] std::string prefix() const {
    switch (kind) {
    case Backend::NaturalAdd: return "N";
    case Backend::NumericalSemigroup: return "NS";
    case Backend::BlockMonoid: return "BM" + std::to_string(modulus);
    case Backend::FreeCommutative: return "FC";
    case Backend::PositiveIntegersMul: return "MUL";
    case Backend::Table: return "T";
    case Backend::IdealAdapter: return "I";
    }
    return "?";
  }
};

// ---------------------------------------------------------------- builders

Monoid Monoid::natural_add(std::uint64_t cap) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::NaturalAdd;
  impl->window = cap;
  impl->value_to_id.resize(cap + 1);
  for (std::uint64_t v = 0; v <= cap; ++v) {
    impl->elements.emplace_back(v);
    impl->value_to_id[v] = static_cast<std::int32_t>(v);
  }
  impl->finalize(true);
  return Monoid(std::move(impl));
}

Monoid Monoid::numerical_semigroup(std::vector<std::uint64_t> generators,
                                   std::uint64_t cap) {
  if (generators.empty()) throw SchemaError("numerical semigroup needs generators");
  for (auto g : generators)
    if (g == 0) throw SchemaError("generators must be positive");
  std::uint64_t g = 0;
  for (auto x : generators) g = std::gcd(g, x);
  for (auto &x : generators) x /= g;
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::NumericalSemigroup;
  impl->window = cap;
  impl->gcd = g;
  impl->gens = generators;
  std::vector<char> member(cap + 1, 0);
  member[0] = 1;
  for (std::uint64_t v = 1; v <= cap; ++v)
    for (auto gen : generators)
      if (gen <= v && member[v - gen]) {
        member[v] = 1;
        break;
      }
  impl->value_to_id.assign(cap + 1, -1);
  for (std::uint64_t v = 0; v <= cap; ++v)
    if (member[v]) {
      impl->value_to_id[v] = static_cast<std::int32_t>(impl->elements.size());
      impl->elements.emplace_back(v);
    }
  impl->finalize(true);
  return Monoid(std::move(impl));
}

Monoid Monoid::block_monoid(std::uint32_t modulus, std::uint32_t max_length) {
  if (modulus < 2) throw SchemaError("block monoid modulus must be >= 2");
  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::BlockMonoid;
  impl->window = max_length;
  impl->modulus = modulus;
  std::vector<std::uint32_t> cur;
  // Nondecreasing sequences of each length, generated in lexicographic order.
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t remaining, std::uint32_t min_res, std::uint32_t sum) {
        if (remaining == 0) {
          if (sum % modulus == 0) impl->elements.push_back(Element::seq(cur));
          return;
        }
        for (std::uint32_t r = min_res; r < modulus; ++r) {
          cur.push_back(r);
          rec(remaining - 1, r, (sum + r) % modulus);
          cur.pop_back();
        }
      };
  for (std::uint32_t len = 0; len <= max_length; ++len) rec(len, 0, 0);
  impl->finalize(true);
  return Monoid(std::move(impl));
}

Monoid Monoid::free_commutative(std::uint32_t rank, std::uint32_t max_l1) {
  if (rank < 1) throw SchemaError("free commutative rank must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::FreeCommutative;
  impl->window = max_l1;
  impl->rank = rank;
  std::vector<std::uint32_t> cur(rank, 0);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t pos,
                                                              std::uint32_t left) {
    if (pos + 1 == rank) {
      cur[pos] = left;
      impl->elements.push_back(Element::vec(cur));
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  for (std::uint32_t total = 0; total <= max_l1; ++total) rec(0, total);
  impl->finalize(true);
  return Monoid(std::move(impl));
}

Monoid Monoid::positive_mul(std::uint64_t cap) {
  if (cap < 1) throw SchemaError("positive_mul window must be >= 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = Backend::PositiveIntegersMul;
  impl->window = cap;
  for (std::uint64_t v = 1; v <= cap; ++v) impl->elements.emplace_back(v);
  impl->finalize(true);
  return Monoid(std::move(impl));
}

Monoid Monoid::table(TableSpec spec, Backend kind, std::string label) {
  if (kind != Backend::Table && kind != Backend::IdealAdapter)
    throw SchemaError("table() needs a table-like backend");
  const std::size_t n = spec.names.size();
  if (n == 0) throw SchemaError("table needs at least one element");
  if (spec.add.size() != n || spec.leq.size() != n)
    throw SchemaError("table dimensions do not match element count");
  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->window = n;
  impl->label = std::move(label);
  impl->names = spec.names;
  impl->sum_table.assign(n * n, -1);
  impl->lower.assign(n, DynBitset(n));
  impl->upper.assign(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.add[i].size() != n || spec.leq[i].size() != n)
      throw SchemaError("table row " + std::to_string(i) + " has wrong length");
    impl->elements.emplace_back(Handle{i});
    for (std::size_t j = 0; j < n; ++j) {
      if (auto s = spec.add[i][j]) {
        if (*s >= n) throw SchemaError("table sum index out of range");
        impl->sum_table[i * n + j] = static_cast<std::int32_t>(*s);
      }
      if (spec.leq[i][j]) {
        impl->lower[j].set(i);
        impl->upper[i].set(j);
      }
    }
  }
  impl->finalize(false);
  return Monoid(std::move(impl));
}

// ---------------------------------------------------------------- queries

Backend Monoid::backend() const { return impl_->kind; }
std::uint64_t Monoid::window() const { return impl_->window; }
std::size_t Monoid::size() const { return impl_->n(); }
const std::vector<Element> &Monoid::elements() const { return impl_->elements; }
const Element &Monoid::element(ElemId id) const { return impl_->elements.at(id); }
ElemId Monoid::identity() const { return impl_->identity; }
const std::string &Monoid::label() const { return impl_->label; }

std::string Monoid::id() const {
  std::ostringstream os;
  switch (impl_->kind) {
  case Backend::NaturalAdd: os << "nat"; break;
  case Backend::NumericalSemigroup: {
    os << "ns:";
    for (std::size_t i = 0; i < impl_->gens.size(); ++i)
      os << (i ? "," : "") << impl_->gens[i];
    break;
  }
  case Backend::BlockMonoid: os << "bm:" << impl_->modulus; break;
  case Backend::FreeCommutative: os << "fc:" << impl_->rank; break;
  case Backend::PositiveIntegersMul: os << "mul"; break;
  case Backend::Table:
  case Backend::IdealAdapter:
    os << (impl_->label.empty() ? "table" : impl_->label);
    break;
  }
  os << '@' << impl_->window;
  return os.str();
}

std::optional<ElemId> Monoid::find(const Element &e) const {
  impl_->check_payload_kind(e);
  return impl_->lookup(e);
}

ElemId Monoid::id_of(const Element &e) const {
  auto id = find(e);
  if (!id) throw NotInWindow(render(e) + " is outside the window of " + this->id());
  return *id;
}

bool Monoid::is_strictly_positive(ElemId x) const {
  return impl_->positive.test(x);
}

std::vector<ElemId> Monoid::positive_ids() const {
  return impl_->positive.indices();
}

const DynBitset &Monoid::positive_set() const { return impl_->positive; }
std::size_t Monoid::out_of_window_pairs() const { return impl_->oow_pairs; }

std::optional<ElemId> Monoid::sum(ElemId a, ElemId b) const {
  return impl_->compute_sum(a, b);
}

bool Monoid::leq(ElemId a, ElemId b) const { return impl_->lower[b].test(a); }

bool Monoid::divides(ElemId a, ElemId b) const {
  if (impl_->is_catalog()) return impl_->native_leq(a, b);
  return divides_by_sum(a, b);
}

std::optional<ElemId> Monoid::cofactor(ElemId a, ElemId b) const {
  if (impl_->is_catalog()) {
    // a + x = b forces x <= b in every catalog backend.
    for (auto x : impl_->divisor_lists[b])
      if (sum(a, x) == b) return x;
    return std::nullopt;
  }
  for (ElemId x = 0; x < size(); ++x)
    if (sum(a, x) == b) return x;
  return std::nullopt;
}

bool Monoid::divides_by_sum(ElemId a, ElemId b) const {
  for (ElemId x = 0; x < size(); ++x)
    if (sum(a, x) == b) return true;
  return false;
}

const DynBitset &Monoid::lower_set(ElemId x) const { return impl_->lower.at(x); }
const DynBitset &Monoid::upper_set(ElemId x) const { return impl_->upper.at(x); }
const std::vector<ElemId> &Monoid::divisors(ElemId x) const {
  return impl_->divisor_lists.at(x);
}

std::vector<std::pair<ElemId, ElemId>> Monoid::decompositions(ElemId x) const {
  std::vector<std::pair<ElemId, ElemId>> out;
  if (impl_->is_catalog()) {
    const auto &ds = impl_->divisor_lists[x];
    for (auto u : ds)
      for (auto v : ds)
        if (u <= v && sum(u, v) == x) out.emplace_back(u, v);
    return out;
  }
  for (ElemId u = 0; u < size(); ++u)
    for (ElemId v = u; v < size(); ++v)
      if (sum(u, v) == x) out.emplace_back(u, v);
  return out;
}

std::variant<Element, OutOfWindow> Monoid::add(const Element &a,
                                               const Element &b) const {
  auto s = sum(id_of(a), id_of(b));
  if (!s) return OutOfWindow{};
  return element(*s);
}

bool Monoid::divides(const Element &a, const Element &b) const {
  return divides(id_of(a), id_of(b));
}

std::vector<Element> Monoid::atoms() const {
  std::vector<Element> out;
  for (auto x : positive_ids()) {
    bool decomposable = false;
    for (auto [u, v] : decompositions(x))
      if (is_strictly_positive(u) && is_strictly_positive(v)) {
        decomposable = true;
        break;
      }
    if (!decomposable) out.push_back(element(x));
  }
  return out;
}

std::string Monoid::render(ElemId id) const { return render(element(id)); }

std::string Monoid::render(const Element &e) const {
  std::ostringstream os;
  os << impl_->prefix() << ':';
  std::visit(
      [&](const auto &p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, std::uint64_t>) {
          os << p;
        } else if constexpr (std::is_same_v<T, ExponentVector>) {
          os << '(' << join_numbers(p.exps) << ')';
        } else if constexpr (std::is_same_v<T, ZeroSumSequence>) {
          os << '[' << join_numbers(p.residues) << ']';
        } else {
          if (p.index < impl_->names.size())
            os << impl_->names[p.index];
          else
            os << '#' << p.index;
        }
      },
      e.payload());
  return os.str();
}

Element Monoid::parse_element(std::string_view text) const {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!impl_->is_catalog()) {
    for (std::size_t i = 0; i < impl_->names.size(); ++i)
      if (impl_->names[i] == text) return Element(Handle{i});
  }
  const std::string pre = impl_->prefix() + ":";
  if (text.substr(0, pre.size()) == pre) text.remove_prefix(pre.size());
  switch (impl_->kind) {
  case Backend::NaturalAdd:
  case Backend::NumericalSemigroup:
  case Backend::PositiveIntegersMul: {
    auto nums = parse_numbers(text);
    if (nums.size() != 1 || text.find_first_of("([") != std::string_view::npos)
      throw SchemaError("expected a single integer, got '" + std::string(text) + "'");
    return Element(nums[0]);
  }
  case Backend::FreeCommutative: {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
      throw SchemaError("expected an exponent vector '(a,b,...)'");
    auto nums = parse_numbers(text.substr(1, text.size() - 2));
    if (nums.size() != impl_->rank)
      throw BackendMismatch("exponent vector has wrong length");
    std::vector<std::uint32_t> v(nums.begin(), nums.end());
    return Element::vec(std::move(v));
  }
  case Backend::BlockMonoid: {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
      throw SchemaError("expected a residue sequence '[r,...]'");
    auto nums = parse_numbers(text.substr(1, text.size() - 2));
    std::vector<std::uint32_t> v;
    std::uint64_t s = 0;
    for (auto x : nums) {
      if (x >= impl_->modulus)
        throw InvariantViolation("residue " + std::to_string(x) + " is not reduced");
      v.push_back(static_cast<std::uint32_t>(x));
      s += x;
    }
    if (s % impl_->modulus != 0)
      throw InvariantViolation("block monoid element must have zero residue sum");
    return Element::seq(std::move(v));
  }
  case Backend::Table:
  case Backend::IdealAdapter:
    for (std::size_t i = 0; i < impl_->names.size(); ++i)
      if (impl_->names[i] == text) return Element(Handle{i});
    throw NotInWindow("no table element named '" + std::string(text) + "'");
  }
  throw SchemaError("unparseable element");
}

const std::vector<std::uint64_t> &Monoid::generators() const { return impl_->gens; }
std::uint64_t Monoid::generator_gcd() const { return impl_->gcd; }
std::uint32_t Monoid::modulus() const { return impl_->modulus; }
std::uint32_t Monoid::rank() const { return impl_->rank; }
const std::vector<std::string> &Monoid::table_names() const { return impl_->names; }

} // namespace ordalg
