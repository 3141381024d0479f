#include "ordalg/riesz.hpp"

#include "ordalg/error.hpp"
#include "ordalg/parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ordalg {

namespace {

// Sum of a list of window elements, or nullopt once it leaves the window.
std::optional<ElemId> total(const Monoid &m, std::initializer_list<ElemId> xs) {
  ElemId acc = m.identity();
  for (auto x : xs) {
    auto s = m.sum(acc, x);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

bool sums_equal(const Monoid &m, std::initializer_list<ElemId> lhs,
                std::initializer_list<ElemId> rhs) {
  auto l = total(m, lhs);
  auto r = total(m, rhs);
  return l && r && *l == *r;
}

// Equality of two sums in the group of differences. Decided inside the window
// where possible (the window is down-closed, so one side in and one out means
// unequal), otherwise by backend normal forms; nullopt when neither applies.
std::optional<bool> group_sums_equal(const GroupContext &g,
                                     std::initializer_list<ElemId> lhs,
                                     std::initializer_list<ElemId> rhs) {
  const Monoid &m = g.monoid();
  auto l = total(m, lhs);
  auto r = total(m, rhs);
  if (l && r) return *l == *r;
  if (l || r) return false;
  std::vector<GroupElement> terms;
  for (auto x : lhs) terms.push_back(g.embed(m.element(x)));
  for (auto x : rhs) terms.push_back(g.negate(g.embed(m.element(x))));
  auto d = g.normal_sum(terms);
  if (!d) return std::nullopt;
  return *d == *g.normal_form(g.zero());
}

// t = t1 + t2 with t1 <= u and t2 <= v, first t1 in canonical order.
std::optional<std::pair<ElemId, ElemId>> primal_split(const Monoid &m, ElemId t,
                                                      ElemId u, ElemId v) {
  for (auto t1 : (m.lower_set(t) & m.lower_set(u)).indices()) {
    auto t2 = m.cofactor(t1, t);
    if (t2 && m.leq(*t2, v)) return std::make_pair(t1, *t2);
  }
  return std::nullopt;
}

ElemId need_cofactor(const Monoid &m, ElemId a, ElemId b) {
  auto c = m.cofactor(a, b);
  if (!c)
    throw PreconditionUnmet(m.render(a) + " <= " + m.render(b) +
                            " has no additive witness in the window");
  return *c;
}

InterpolationWitness search_22(const Monoid &m, ElemId a, ElemId b, ElemId x,
                               ElemId y, std::optional<ElemId> &found) {
  DynBitset cand = m.upper_set(a) & m.upper_set(b);
  cand &= m.lower_set(x);
  cand &= m.lower_set(y);
  InterpolationWitness w;
  w.path = "search";
  auto ids = cand.indices();
  if (!ids.empty()) found = ids.front();
  return w;
}

void add_bound_checks(const Monoid &m, InterpolationWitness &w, ElemId a, ElemId b,
                      ElemId x, ElemId y, ElemId z) {
  w.checks.push_back({"a <= z", m.leq(a, z)});
  w.checks.push_back({"b <= z", m.leq(b, z)});
  w.checks.push_back({"z <= x", m.leq(z, x)});
  w.checks.push_back({"z <= y", m.leq(z, y)});
}

InterpolationResult constructive_22(const Monoid &m, ElemId a, ElemId b, ElemId x,
                                    ElemId y) {
  InterpolationWitness w;
  w.path = "constructive";
  auto rec = [&](const char *name, ElemId v) {
    w.derivation.emplace_back(name, m.element(v));
  };
  const ElemId x1 = need_cofactor(m, a, x);
  const ElemId x2 = need_cofactor(m, b, x);
  const ElemId y1 = need_cofactor(m, a, y);
  const ElemId y2 = need_cofactor(m, b, y);
  rec("x1", x1);
  rec("x2", x2);
  rec("y1", y1);
  rec("y2", y2);
  w.checks.push_back({"x = x1 + a", sums_equal(m, {x1, a}, {x})});
  w.checks.push_back({"x = x2 + b", sums_equal(m, {x2, b}, {x})});
  w.checks.push_back({"y = y1 + a", sums_equal(m, {y1, a}, {y})});
  w.checks.push_back({"y = y2 + b", sums_equal(m, {y2, b}, {y})});

  // b <= x1 + a: split b across x1 and a.
  auto s1 = primal_split(m, b, x1, a);
  if (!s1)
    throw PrimalWitnessUnavailable(m.render(b) + " does not split across " +
                                   m.render(x1) + " + " + m.render(a));
  const auto [b1, b2] = *s1;
  rec("b1", b1);
  rec("b2", b2);
  w.checks.push_back({"b = b1 + b2", sums_equal(m, {b1, b2}, {b})});
  w.checks.push_back({"b1 <= x1", m.leq(b1, x1)});
  w.checks.push_back({"b2 <= a", m.leq(b2, a)});

  const ElemId x1p = need_cofactor(m, b1, x1);
  const ElemId a1 = need_cofactor(m, b2, a);
  rec("x1'", x1p);
  rec("a1", a1);
  w.checks.push_back({"x1 = x1' + b1", sums_equal(m, {x1p, b1}, {x1})});
  w.checks.push_back({"a = a1 + b2", sums_equal(m, {a1, b2}, {a})});
  w.checks.push_back({"x1' + a1 = x2", sums_equal(m, {x1p, a1}, {x2})});
  w.checks.push_back({"y1 + a1 = y2 + b1", sums_equal(m, {y1, a1}, {y2, b1})});

  // b1 <= y1 + a1: split b1 across y1 and a1.
  auto s2 = primal_split(m, b1, y1, a1);
  if (!s2)
    throw PrimalWitnessUnavailable(m.render(b1) + " does not split across " +
                                   m.render(y1) + " + " + m.render(a1));
  const auto [b3, b4] = *s2;
  rec("b3", b3);
  rec("b4", b4);
  w.checks.push_back({"b1 = b3 + b4", sums_equal(m, {b3, b4}, {b1})});
  w.checks.push_back({"b3 <= y1", m.leq(b3, y1)});
  w.checks.push_back({"b4 <= a1", m.leq(b4, a1)});

  const ElemId y1p = need_cofactor(m, b3, y1);
  const ElemId a1p = need_cofactor(m, b4, a1);
  rec("y1'", y1p);
  rec("a1'", a1p);
  w.checks.push_back({"y2 = y1' + a1'", sums_equal(m, {y1p, a1p}, {y2})});
  const ElemId y4 = need_cofactor(m, y1p, y1);
  rec("y4", y4);
  w.checks.push_back({"y1 = y4 + y1'", sums_equal(m, {y4, y1p}, {y1})});
  w.checks.push_back({"y4 + a = a1' + b", sums_equal(m, {y4, a}, {a1p, b})});

  auto z = m.sum(a1p, b);
  if (!z) throw PreconditionUnmet("a1' + b leaves the window");
  rec("z", *z);
  add_bound_checks(m, w, a, b, x, y, *z);
  w.z = m.element(*z);
  return w;
}

ElemId id_checked(const Monoid &m, const Element &e) { return m.id_of(e); }

} // namespace

// ---------------------------------------------------------------- (2,2)

InterpolationResult interpolate_22(const Monoid &m, const Element &ae,
                                   const Element &be, const Element &xe,
                                   const Element &ye, InterpolationMode mode) {
  const ElemId a = id_checked(m, ae), b = id_checked(m, be);
  const ElemId x = id_checked(m, xe), y = id_checked(m, ye);
  if (!m.leq(a, x) || !m.leq(a, y) || !m.leq(b, x) || !m.leq(b, y))
    throw PreconditionUnmet("interpolation needs a, b <= x, y");
  if (mode == InterpolationMode::Constructive) return constructive_22(m, a, b, x, y);
  std::optional<ElemId> found;
  auto w = search_22(m, a, b, x, y, found);
  if (!found)
    return NoInterpolant{"no window element lies between " + m.render(a) + ", " +
                         m.render(b) + " and " + m.render(x) + ", " + m.render(y)};
  w.derivation.emplace_back("z", m.element(*found));
  add_bound_checks(m, w, a, b, x, y, *found);
  w.z = m.element(*found);
  return w;
}

InterpolationResult interpolate_nm(const Monoid &m, const std::vector<Element> &As,
                                   const std::vector<Element> &Bs,
                                   InterpolationMode mode) {
  if (As.empty() || Bs.empty())
    throw PreconditionUnmet("(n,m) interpolation needs nonempty sides");
  for (const auto &a : As)
    for (const auto &b : Bs)
      if (!m.leq(a, b))
        throw PreconditionUnmet(m.render(a) + " is not below " + m.render(b));

  InterpolationWitness out;
  out.path = "fold";
  auto step = [&](const Element &a, const Element &b, const Element &x,
                  const Element &y) -> std::optional<Element> {
    auto r = interpolate_22(m, a, b, x, y, mode);
    if (std::holds_alternative<NoInterpolant>(r)) {
      out.reductions.push_back("(" + m.render(a) + ", " + m.render(b) + "; " +
                               m.render(x) + ", " + m.render(y) + ") -> none");
      return std::nullopt;
    }
    const auto &w = std::get<InterpolationWitness>(r);
    for (const auto &c : w.checks) out.checks.push_back(c);
    out.reductions.push_back("(" + m.render(a) + ", " + m.render(b) + "; " +
                             m.render(x) + ", " + m.render(y) + ") -> " +
                             m.render(w.element()));
    return w.element();
  };

  // Two lower elements below every member of Bs.
  auto over_uppers = [&](const Element &a, const Element &b) -> std::optional<Element> {
    if (Bs.size() == 1) return step(a, b, Bs[0], Bs[0]);
    auto d = step(a, b, Bs[0], Bs[1]);
    for (std::size_t k = 2; d && k < Bs.size(); ++k) d = step(a, b, *d, Bs[k]);
    return d;
  };

  Element cur = As[0];
  for (std::size_t i = 1; i < As.size(); ++i) {
    auto d = over_uppers(cur, As[i]);
    if (!d) {
      std::string why = "a (2,2) step has no interpolant";
      if (!out.reductions.empty()) why += ": " + out.reductions.back();
      return NoInterpolant{why};
    }
    cur = *d;
    out.derivation.emplace_back("d" + std::to_string(i), cur);
  }
  for (const auto &a : As) out.checks.push_back({"a <= d", m.leq(a, cur)});
  for (const auto &b : Bs) out.checks.push_back({"d <= b", m.leq(cur, b)});
  out.z = cur;
  return out;
}

// ---------------------------------------------------------------- group

GroupContext::GroupContext(Monoid m) : m_(std::move(m)) {
  if (!check_cancellative(m_).holds())
    throw HypothesisUnmet(m_.id() + " is not cancellative");
  if (!check_conic(m_).holds()) throw HypothesisUnmet(m_.id() + " is not conic");
}

GroupElement GroupContext::embed(const Element &x) const {
  (void)m_.id_of(x);
  return {x, m_.element(m_.identity())};
}

GroupElement GroupContext::zero() const {
  return {m_.element(m_.identity()), m_.element(m_.identity())};
}

std::optional<bool> GroupContext::equal(const GroupElement &u,
                                        const GroupElement &v) const {
  auto l = m_.sum(m_.id_of(u.pos), m_.id_of(v.neg));
  auto r = m_.sum(m_.id_of(v.pos), m_.id_of(u.neg));
  if (l && r) return *l == *r;
  if (l || r) return false; // exactly one cross sum is outside the window
  if (auto nu = normal_form(u)) return *nu == *normal_form(v);
  return std::nullopt;
}

std::optional<GroupElement> GroupContext::add(const GroupElement &u,
                                              const GroupElement &v) const {
  auto p = m_.sum(m_.id_of(u.pos), m_.id_of(v.pos));
  auto n = m_.sum(m_.id_of(u.neg), m_.id_of(v.neg));
  if (!p || !n) return std::nullopt;
  return GroupElement{m_.element(*p), m_.element(*n)};
}

GroupElement GroupContext::negate(const GroupElement &u) const {
  return {u.neg, u.pos};
}

std::optional<bool> GroupContext::leq(const GroupElement &u,
                                      const GroupElement &v) const {
  auto l = m_.sum(m_.id_of(u.pos), m_.id_of(v.neg));
  auto r = m_.sum(m_.id_of(v.pos), m_.id_of(u.neg));
  if (l && r) return m_.divides(*l, *r);
  if (r && !l) return false;
  if (auto d = normal_sum({v, negate(u)})) return in_cone(*d);
  return std::nullopt;
}

std::optional<Element> GroupContext::cone_difference(const GroupElement &u,
                                                     const GroupElement &v) const {
  auto l = m_.sum(m_.id_of(u.pos), m_.id_of(v.neg));
  auto r = m_.sum(m_.id_of(v.pos), m_.id_of(u.neg));
  if (!l || !r) return std::nullopt;
  auto h = m_.cofactor(*l, *r);
  if (!h) return std::nullopt;
  return m_.element(*h);
}

std::optional<GroupElement> GroupContext::shift(const GroupElement &u,
                                                const Element &h) const {
  auto p = m_.sum(m_.id_of(u.pos), m_.id_of(h));
  if (!p) return std::nullopt;
  return GroupElement{m_.element(*p), u.neg};
}

bool GroupContext::has_normal_form() const {
  switch (m_.backend()) {
  case Backend::NaturalAdd:
  case Backend::NumericalSemigroup:
  case Backend::FreeCommutative:
  case Backend::PositiveIntegersMul:
    return true;
  default:
    return false;
  }
}

std::optional<std::vector<std::int64_t>>
GroupContext::normal_form(const GroupElement &u) const {
  switch (m_.backend()) {
  case Backend::NaturalAdd:
  case Backend::NumericalSemigroup:
    return std::vector<std::int64_t>{static_cast<std::int64_t>(u.pos.scalar()) -
                                     static_cast<std::int64_t>(u.neg.scalar())};
  case Backend::FreeCommutative: {
    const auto &p = std::get<ExponentVector>(u.pos.payload()).exps;
    const auto &n = std::get<ExponentVector>(u.neg.payload()).exps;
    std::vector<std::int64_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      out[i] = static_cast<std::int64_t>(p[i]) - static_cast<std::int64_t>(n[i]);
    return out;
  }
  case Backend::PositiveIntegersMul: {
    auto num = u.pos.scalar();
    auto den = u.neg.scalar();
    auto g = std::gcd(num, den);
    return std::vector<std::int64_t>{static_cast<std::int64_t>(num / g),
                                     static_cast<std::int64_t>(den / g)};
  }
  default:
    return std::nullopt;
  }
}

std::optional<bool> GroupContext::in_cone(const std::vector<std::int64_t> &nf) const {
  switch (m_.backend()) {
  case Backend::NaturalAdd:
    return nf[0] >= 0;
  case Backend::NumericalSemigroup:
    return nf[0] >= 0 &&
           semigroup_member(m_.generators(), static_cast<std::uint64_t>(nf[0]));
  case Backend::FreeCommutative:
    return std::all_of(nf.begin(), nf.end(), [](std::int64_t e) { return e >= 0; });
  case Backend::PositiveIntegersMul:
    return nf[1] == 1;
  default:
    return std::nullopt;
  }
}

std::optional<std::vector<std::int64_t>>
GroupContext::normal_sum(const std::vector<GroupElement> &terms) const {
  if (!has_normal_form()) return std::nullopt;
  const bool mul = m_.backend() == Backend::PositiveIntegersMul;
  auto acc = *normal_form(zero());
  for (const auto &t : terms) {
    auto nf = *normal_form(t);
    if (mul) {
      // Cross-reduce first so the product stays a reduced fraction.
      auto g1 = std::gcd(acc[0], nf[1]);
      auto g2 = std::gcd(nf[0], acc[1]);
      acc = {(acc[0] / g1) * (nf[0] / g2), (acc[1] / g2) * (nf[1] / g1)};
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += nf[i];
    }
  }
  return acc;
}

std::string GroupContext::render(const GroupElement &u) const {
  return "(" + m_.render(u.pos) + " - " + m_.render(u.neg) + ")";
}

namespace {

std::optional<GroupElement> cone_search(const GroupContext &g, const GroupElement &p,
                                        const GroupElement &q, const GroupElement &r,
                                        const GroupElement &s) {
  const Monoid &m = g.monoid();
  for (ElemId h = 0; h < m.size(); ++h) {
    auto z = g.shift(p, m.element(h));
    if (!z) continue;
    if (g.leq(q, *z).value_or(false) && g.leq(*z, r).value_or(false) &&
        g.leq(*z, s).value_or(false))
      return z;
  }
  return std::nullopt;
}

} // namespace

GroupInterpolationResult group_interpolate(const GroupContext &g, const GroupElement &p,
                                           const GroupElement &q, const GroupElement &r,
                                           const GroupElement &s) {
  const Monoid &m = g.monoid();
  for (auto [lo, hi] : {std::pair{&p, &r}, {&p, &s}, {&q, &r}, {&q, &s}}) {
    auto le = g.leq(*lo, *hi);
    if (!le)
      return WindowInconclusive{"cannot compare " + g.render(*lo) + " and " +
                                g.render(*hi) + " inside the window"};
    if (!*le) throw PreconditionUnmet("group interpolation needs p, q <= r, s");
  }
  auto ae = g.cone_difference(p, r);
  auto ce = g.cone_difference(p, s);
  auto de = g.cone_difference(q, r);
  auto be = g.cone_difference(q, s);
  if (!ae || !be || !ce || !de)
    return WindowInconclusive{"a cone difference leaves the window"};
  const ElemId a = m.id_of(*ae), b = m.id_of(*be), c = m.id_of(*ce), d = m.id_of(*de);
  const ElemId pp = m.id_of(p.pos), pn = m.id_of(p.neg);
  const ElemId qp = m.id_of(q.pos), qn = m.id_of(q.neg);
  const ElemId rp = m.id_of(r.pos), rn = m.id_of(r.neg);
  const ElemId sp = m.id_of(s.pos), sn = m.id_of(s.neg);

  InterpolationWitness w;
  bool undecided = false;
  auto eq = [&](std::initializer_list<ElemId> lhs, std::initializer_list<ElemId> rhs) {
    auto e = group_sums_equal(g, lhs, rhs);
    if (!e) undecided = true;
    return e.value_or(true);
  };
  auto le = [&](const GroupElement &u, const GroupElement &v) {
    auto e = g.leq(u, v);
    if (!e) undecided = true;
    return e.value_or(true);
  };
  auto settle = [&](InterpolationWitness &&done) -> GroupInterpolationResult {
    if (undecided)
      return WindowInconclusive{"a derivation equation cannot be decided inside the window"};
    return std::move(done);
  };
  w.derivation = {{"a", *ae}, {"b", *be}, {"c", *ce}, {"d", *de}};
  w.checks.push_back({"r = p + a", eq({pp, a, rn}, {rp, pn})});
  w.checks.push_back({"s = p + c", eq({pp, c, sn}, {sp, pn})});
  w.checks.push_back({"r = q + d", eq({qp, d, rn}, {rp, qn})});
  w.checks.push_back({"s = q + b", eq({qp, b, sn}, {sp, qn})});
  // a', a'', b', b'' all lie below a, b, c, d, so the split search stays in
  // the window even when a + b does not.
  w.checks.push_back({"a + b = c + d", eq({a, b}, {c, d})});

  for (auto a1 : (m.lower_set(a) & m.lower_set(c)).indices()) {
    auto a2 = m.cofactor(a1, a);
    auto b1 = m.cofactor(a1, c);
    if (!a2 || !b1 || !m.leq(*b1, b)) continue;
    auto b2 = m.cofactor(*b1, b);
    if (!b2 || m.sum(*a2, *b2) != d) continue;
    w.derivation.emplace_back("a'", m.element(a1));
    w.derivation.emplace_back("a''", m.element(*a2));
    w.derivation.emplace_back("b'", m.element(*b1));
    w.derivation.emplace_back("b''", m.element(*b2));
    w.checks.push_back({"a = a' + a''", eq({a1, *a2}, {a})});
    w.checks.push_back({"b = b' + b''", eq({*b1, *b2}, {b})});
    w.checks.push_back({"c = a' + b'", eq({a1, *b1}, {c})});
    w.checks.push_back({"d = a'' + b''", eq({*a2, *b2}, {d})});
    w.checks.push_back({"r = p + a' + a''", eq({pp, a1, *a2, rn}, {rp, pn})});
    w.checks.push_back({"s = p + a' + b'", eq({pp, a1, *b1, sn}, {sp, pn})});
    w.checks.push_back({"r = q + a'' + b''", eq({qp, *a2, *b2, rn}, {rp, qn})});
    w.checks.push_back({"s = q + b' + b''", eq({qp, *b1, *b2, sn}, {sp, qn})});
    w.checks.push_back({"p + a' = q + b''", eq({pp, a1, qn}, {qp, *b2, pn})});
    auto z = g.shift(p, m.element(a1));
    if (!z) return WindowInconclusive{"p + a' leaves the window"};
    w.checks.push_back({"p <= z", le(p, *z)});
    w.checks.push_back({"q <= z", le(q, *z)});
    w.checks.push_back({"z <= r", le(*z, r)});
    w.checks.push_back({"z <= s", le(*z, s)});
    w.path = "split";
    w.z = *z;
    return settle(std::move(w));
  }

  if (auto z = cone_search(g, p, q, r, s)) {
    w.path = "cone-search";
    w.checks.push_back({"p <= z", le(p, *z)});
    w.checks.push_back({"q <= z", true});
    w.checks.push_back({"z <= r", true});
    w.checks.push_back({"z <= s", true});
    w.z = *z;
    return settle(std::move(w));
  }
  return NoInterpolant{"no splitting of a + b = c + d and no p + h between"};
}

std::vector<GroupElement> group_sample(const GroupContext &g, std::size_t base) {
  const Monoid &m = g.monoid();
  base = std::min(base, m.size());
  std::vector<GroupElement> out;
  for (ElemId i = 0; i < base; ++i)
    for (ElemId j = 0; j < base; ++j) {
      GroupElement u{m.element(i), m.element(j)};
      bool dup = false;
      for (const auto &v : out)
        if (g.equal(u, v).value_or(false)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(u);
    }
  return out;
}

GroupSweepReport sweep_group_interpolation(const GroupContext &g, std::size_t base) {
  GroupSweepReport rep;
  const auto sample = group_sample(g, base);
  const std::size_t k = sample.size();
  std::vector<std::optional<bool>> le(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) le[i * k + j] = g.leq(sample[i], sample[j]);
  auto below = [&](std::size_t i, std::size_t j) {
    return le[i * k + j].value_or(false);
  };

  struct Row {
    std::size_t quads = 0, split = 0, cone = 0, none = 0, bad = 0, unchecked = 0;
    bool agree = true;
    std::optional<std::vector<std::size_t>> first_none;
    std::optional<std::vector<std::size_t>> first_bad;
  };
  auto rows = parallel_map<Row>(k, [&](std::size_t pi) {
    Row row;
    for (std::size_t qi = 0; qi < k; ++qi)
      for (std::size_t ri = 0; ri < k; ++ri) {
        if (!below(pi, ri) || !below(qi, ri)) continue;
        for (std::size_t si = 0; si < k; ++si) {
          if (!below(pi, si) || !below(qi, si)) continue;
          auto res = group_interpolate(g, sample[pi], sample[qi], sample[ri], sample[si]);
          if (std::holds_alternative<WindowInconclusive>(res)) {
            ++row.unchecked;
            continue;
          }
          ++row.quads;
          const bool feasible =
              cone_search(g, sample[pi], sample[qi], sample[ri], sample[si]).has_value();
          if (auto *w = std::get_if<InterpolationWitness>(&res)) {
            (w->path == "split" ? row.split : row.cone) += 1;
            if (!feasible) row.agree = false;
            if (!w->all_checks_hold()) {
              ++row.bad;
              if (!row.first_bad) row.first_bad = std::vector<std::size_t>{pi, qi, ri, si};
            }
          } else {
            ++row.none;
            if (feasible) row.agree = false;
            if (!row.first_none) row.first_none = std::vector<std::size_t>{pi, qi, ri, si};
          }
        }
      }
    return row;
  });

  auto as_witness = [&](const std::vector<std::size_t> &idx) {
    std::vector<Element> w;
    for (auto i : idx) {
      w.push_back(sample[i].pos);
      w.push_back(sample[i].neg);
    }
    return w;
  };
  std::optional<std::vector<std::size_t>> first_none, first_bad;
  for (const auto &row : rows) {
    rep.quadruples += row.quads;
    rep.split_path += row.split;
    rep.cone_path += row.cone;
    rep.no_interpolant += row.none;
    rep.derivation_failures += row.bad;
    rep.verdict.unchecked += row.unchecked;
    rep.modes_agree = rep.modes_agree && row.agree;
    if (!first_none && row.first_none) first_none = row.first_none;
    if (!first_bad && row.first_bad) first_bad = row.first_bad;
  }
  rep.verdict.checked = rep.quadruples;
  if (first_none) {
    std::vector<GroupElement> q;
    for (auto i : *first_none) q.push_back(sample[i]);
    rep.first_no_interpolant = q;
  }
  if (first_bad || first_none) {
    const auto &idx = first_bad ? *first_bad : *first_none;
    auto v = Verdict::fail(as_witness(idx),
                           first_bad ? "a derivation equation failed"
                                     : "quadruple has no interpolant");
    v.checked = rep.verdict.checked;
    v.unchecked = rep.verdict.unchecked;
    rep.verdict = v;
  }
  return rep;
}

// ---------------------------------------------------------------- sweeps

Verdict check_all_primal(const Monoid &m) {
  auto rows = parallel_map<Verdict>(m.size(), [&](std::size_t x) {
    return is_primal(m, static_cast<ElemId>(x));
  });
  Verdict v;
  v.unchecked = m.out_of_window_pairs();
  for (ElemId x = 0; x < m.size(); ++x) {
    v.checked += rows[x].checked;
    if (!rows[x].holds()) {
      std::string why = m.render(x) + " is not primal";
      if (rows[x].witness.size() == 2)
        why += ": it is below " + m.render(rows[x].witness[0]) + " + " +
               m.render(rows[x].witness[1]) + " without splitting";
      auto out = Verdict::fail({m.element(x)}, why);
      out.checked = v.checked;
      out.unchecked = v.unchecked;
      return out;
    }
  }
  return v;
}

Verdict check_interpolation_22(const Monoid &m) {
  struct Row {
    std::size_t checked = 0;
    std::optional<std::vector<ElemId>> witness;
  };
  const std::size_t n = m.size();
  auto rows = parallel_map<Row>(n, [&](std::size_t xi) {
    Row row;
    const ElemId x = static_cast<ElemId>(xi);
    for (ElemId y = x; y < n; ++y) {
      DynBitset L = m.lower_set(x) & m.lower_set(y);
      auto ids = L.indices();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        DynBitset above_a = m.upper_set(ids[i]) & L;
        for (std::size_t j = i; j < ids.size(); ++j) {
          ++row.checked;
          if (!above_a.intersects(m.upper_set(ids[j]))) {
            row.witness = std::vector<ElemId>{ids[i], ids[j], x, y};
            return row;
          }
        }
      }
    }
    return row;
  });
  Verdict v;
  for (const auto &row : rows) {
    v.checked += row.checked;
    if (row.witness) {
      auto out = Verdict::fail(to_elements(m, *row.witness),
                               "a, b <= x, y with no z in between");
      out.checked = v.checked;
      return out;
    }
  }
  return v;
}

Verdict check_interpolation_nm(const Monoid &m, unsigned max_arity) {
  if (max_arity < 1) throw PreconditionUnmet("arity must be at least 1");
  const std::size_t n = m.size();
  Verdict v;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<ElemId> upper_tuple;
  std::optional<Verdict> failure;

  // Lower tuples of each size in turn, so witnesses are as small as possible.
  auto check_lower = [&](const DynBitset &LB) {
    const auto ids = LB.indices();
    std::vector<ElemId> lower_tuple;
    std::size_t target = 0;
    std::function<void(std::size_t, const DynBitset &)> rec =
        [&](std::size_t start, const DynBitset &acc) {
          for (std::size_t i = start; i < ids.size() && !failure; ++i) {
            DynBitset w = lower_tuple.empty() ? (m.upper_set(ids[i]) & LB)
                                              : (acc & m.upper_set(ids[i]));
            lower_tuple.push_back(ids[i]);
            if (lower_tuple.size() < target) {
              if (w.any()) rec(i + 1, w);
            } else {
              ++v.checked;
              if (w.none()) {
                std::vector<ElemId> wit = lower_tuple;
                wit.insert(wit.end(), upper_tuple.begin(), upper_tuple.end());
                failure = Verdict::fail(
                    to_elements(m, wit),
                    "(" + std::to_string(lower_tuple.size()) + "," +
                        std::to_string(upper_tuple.size()) +
                        ") interpolation fails: the first " +
                        std::to_string(lower_tuple.size()) +
                        " elements are below the rest with nothing in between");
              }
            }
            lower_tuple.pop_back();
          }
        };
    for (target = 1; target <= max_arity && !failure; ++target) rec(0, DynBitset(n));
  };

  std::function<void(std::size_t, const DynBitset &)> uppers =
      [&](std::size_t start, const DynBitset &acc) {
        for (ElemId b = static_cast<ElemId>(start); b < n && !failure; ++b) {
          DynBitset LB = upper_tuple.empty() ? m.lower_set(b) : (acc & m.lower_set(b));
          upper_tuple.push_back(b);
          if (seen.insert(LB.indices()).second) check_lower(LB);
          if (!failure && upper_tuple.size() < max_arity) uppers(b + 1, LB);
          upper_tuple.pop_back();
        }
      };
  uppers(0, DynBitset(n));
  if (failure) {
    failure->checked = v.checked;
    return *failure;
  }
  return v;
}

Verdict check_interpolation_modes_agree(const Monoid &m) {
  struct Row {
    std::size_t checked = 0;
    std::optional<std::vector<ElemId>> witness;
    std::string why;
  };
  const std::size_t n = m.size();
  auto rows = parallel_map<Row>(n, [&](std::size_t xi) {
    Row row;
    const ElemId x = static_cast<ElemId>(xi);
    for (ElemId y = x; y < n; ++y) {
      DynBitset L = m.lower_set(x) & m.lower_set(y);
      auto ids = L.indices();
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i; j < ids.size(); ++j) {
          const ElemId a = ids[i], b = ids[j];
          ++row.checked;
          DynBitset between = m.upper_set(a) & m.upper_set(b);
          const bool feasible = between.intersects(L);
          bool built = false;
          bool verified = true;
          try {
            auto r = interpolate_22(m, m.element(a), m.element(b), m.element(x),
                                    m.element(y), InterpolationMode::Constructive);
            built = true;
            verified = std::get<InterpolationWitness>(r).all_checks_hold();
          } catch (const PrimalWitnessUnavailable &) {
            built = false;
          }
          if (built != feasible || !verified) {
            row.witness = std::vector<ElemId>{a, b, x, y};
            row.why = !verified ? "constructive derivation does not re-verify"
                                : "constructive and search modes disagree";
            return row;
          }
        }
    }
    return row;
  });
  Verdict v;
  for (const auto &row : rows) {
    v.checked += row.checked;
    if (row.witness) {
      auto out = Verdict::fail(to_elements(m, *row.witness), row.why);
      out.checked = v.checked;
      return out;
    }
  }
  return v;
}

EquivalenceReport check_riesz_monoid(const Monoid &m, unsigned max_arity) {
  if (!check_cancellative(m).holds())
    throw HypothesisUnmet(m.id() + " is not cancellative");
  if (!check_divisibility_order(m).holds())
    throw HypothesisUnmet(m.id() + " is not divisibility ordered");
  EquivalenceReport rep;
  rep.all_primal = check_all_primal(m);
  rep.interpolation_22 = check_interpolation_22(m);
  rep.interpolation_nm = check_interpolation_nm(m, max_arity);
  rep.pre_riesz = check_pre_riesz(m, max_arity);
  rep.conic = check_conic(m);
  rep.equivalence_holds = rep.all_primal.status == rep.interpolation_22.status &&
                          rep.interpolation_22.status == rep.interpolation_nm.status;
  rep.implications_hold =
      !rep.all_primal.holds() || (!rep.pre_riesz.fails() && rep.conic.holds());
  return rep;
}

} // namespace ordalg
