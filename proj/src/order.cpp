#include "ordalg/order.hpp"

#include "ordalg/error.hpp"
#include "ordalg/parallel.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace ordalg {

namespace {

std::vector<ElemId> ids_of(const Monoid &m, const std::vector<Element> &xs) {
  std::vector<ElemId> out;
  out.reserve(xs.size());
  for (const auto &x : xs) out.push_back(m.id_of(x));
  return out;
}

void require_not_identity(const Monoid &m, ElemId x, const char *what) {
  if (x == m.identity())
    throw IdentityInput(std::string(what) + " is not defined for the identity");
}

// Saturating binomial coefficient.
std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  if (r > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max() / 2;
  return static_cast<std::size_t>(r + 0.5L);
}

// Does x split as x1 + x2 with x1 <= y1, x2 <= y2?
bool splits(const Monoid &m, ElemId x, ElemId y1, ElemId y2) {
  const DynBitset &lx = m.lower_set(x);
  const bool native = m.backend() != Backend::Table &&
                      m.backend() != Backend::IdealAdapter;
  for (auto x1 : (lx & m.lower_set(y1)).indices()) {
    if (native) {
      auto x2 = m.cofactor(x1, x);
      if (x2 && m.leq(*x2, y2)) return true;
    } else {
      for (auto x2 : m.lower_set(y2).indices())
        if (m.sum(x1, x2) == x) return true;
    }
  }
  return false;
}

// Maximum clique in the "disjoint" graph on `verts`, stopping once it
// exceeds cap.
DisjointBound max_disjoint_family(const Monoid &m, const std::vector<ElemId> &verts,
                                  std::size_t cap) {
  const std::size_t k = verts.size();
  std::vector<DynBitset> adj(k, DynBitset(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (are_disjoint(m, verts[i], verts[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  std::size_t best = 0;
  bool exceeded = false;
  std::function<void(std::size_t, DynBitset, DynBitset)> bk =
      [&](std::size_t size, DynBitset cand, DynBitset excl) {
        if (exceeded) return;
        if (cand.none() && excl.none()) {
          best = std::max(best, size);
          if (best > cap) exceeded = true;
          return;
        }
        if (size + cand.count() <= best) return;
        // pivot: vertex of cand ∪ excl with most neighbours in cand
        DynBitset un = cand;
        un |= excl;
        std::size_t pivot = 0, pivot_deg = 0;
        bool have = false;
        for (auto u : un.indices()) {
          std::size_t d = (cand & adj[u]).count();
          if (!have || d > pivot_deg) {
            pivot = u;
            pivot_deg = d;
            have = true;
          }
        }
        for (auto v : cand.indices()) {
          if (adj[pivot].test(v)) continue;
          bk(size + 1, cand & adj[v], excl & adj[v]);
          if (exceeded) return;
          cand.reset(v);
          excl.set(v);
        }
      };
  DynBitset all(k);
  for (std::size_t i = 0; i < k; ++i) all.set(i);
  bk(0, all, DynBitset(k));
  if (exceeded) return ExceedsCap{best};
  return best;
}

} // namespace

std::vector<Element> to_elements(const Monoid &m, const std::vector<ElemId> &ids) {
  std::vector<Element> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(m.element(i));
  return out;
}

std::optional<ElemId> multiple(const Monoid &m, ElemId x, unsigned n) {
  ElemId acc = m.identity();
  for (unsigned i = 0; i < n; ++i) {
    auto s = m.sum(acc, x);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

// ---------------------------------------------------------------- bounds

DynBitset common_lower_set(const Monoid &m, const std::vector<ElemId> &xs) {
  if (xs.empty()) throw PreconditionUnmet("common lower bounds of an empty set");
  DynBitset acc = m.lower_set(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc &= m.lower_set(xs[i]);
  return acc;
}

std::vector<Element> common_lower_bounds(const Monoid &m,
                                         const std::vector<Element> &xs) {
  return to_elements(m, common_lower_set(m, ids_of(m, xs)).indices());
}

std::optional<ElemId> greatest_of(const Monoid &m, const DynBitset &set) {
  for (auto g : set.indices())
    if (set.is_subset_of(m.lower_set(g))) return g;
  return std::nullopt;
}

std::optional<ElemId> glb_id(const Monoid &m, const std::vector<ElemId> &xs) {
  return greatest_of(m, common_lower_set(m, xs));
}

std::optional<Element> glb(const Monoid &m, const std::vector<Element> &xs) {
  auto g = glb_id(m, ids_of(m, xs));
  if (!g) return std::nullopt;
  return m.element(*g);
}

std::vector<ElemId> minimal_upper_bound_ids(const Monoid &m, ElemId a, ElemId b) {
  DynBitset ub = m.upper_set(a) & m.upper_set(b);
  std::vector<ElemId> out;
  for (auto u : ub.indices())
    if ((m.lower_set(u) & ub).count() == 1) out.push_back(u);
  return out;
}

UpperBounds minimal_upper_bounds(const Monoid &m, const Element &a,
                                 const Element &b) {
  ElemId ia = m.id_of(a);
  ElemId ib = m.id_of(b);
  if (!m.sum(ia, ib))
    return WindowInconclusive{m.render(a) + " + " + m.render(b) +
                              " leaves the window"};
  return to_elements(m, minimal_upper_bound_ids(m, ia, ib));
}

// ---------------------------------------------------------------- structure

Verdict check_cancellative(const Monoid &m) {
  const std::size_t n = m.size();
  struct Row {
    std::size_t checked = 0;
    std::optional<std::pair<ElemId, ElemId>> clash;
  };
  auto rows = parallel_map<Row>(n, [&](std::size_t a) {
    Row row;
    std::vector<std::int64_t> seen(n, -1);
    for (ElemId b = 0; b < n; ++b) {
      auto s = m.sum(static_cast<ElemId>(a), b);
      if (!s) continue;
      ++row.checked;
      if (seen[*s] >= 0) {
        row.clash = {static_cast<ElemId>(seen[*s]), b};
        return row;
      }
      seen[*s] = b;
    }
    return row;
  });
  Verdict v;
  for (std::size_t a = 0; a < n; ++a) {
    v.checked += rows[a].checked;
    if (rows[a].clash) {
      auto [b, c] = *rows[a].clash;
      auto out = Verdict::fail({m.element(static_cast<ElemId>(a)), m.element(b),
                                m.element(c)},
                               "a + b = a + c with b != c");
      out.checked = v.checked;
      out.unchecked = m.out_of_window_pairs();
      return out;
    }
  }
  v.unchecked = m.out_of_window_pairs();
  return v;
}

Verdict check_conic(const Monoid &m) {
  Verdict v;
  const ElemId e = m.identity();
  for (ElemId x = 0; x < m.size(); ++x)
    for (ElemId y = x; y < m.size(); ++y) {
      if (x == e || y == e) continue;
      auto s = m.sum(x, y);
      if (!s) {
        ++v.unchecked;
        continue;
      }
      ++v.checked;
      if (*s == e) {
        auto out = Verdict::fail({m.element(x), m.element(y)},
                                 "two non-identity elements sum to the identity");
        out.checked = v.checked;
        out.unchecked = v.unchecked;
        return out;
      }
    }
  return v;
}

Verdict check_divisibility_order(const Monoid &m) {
  const std::size_t n = m.size();
  Verdict v;
  for (ElemId a = 0; a < n; ++a) {
    DynBitset divisible(n);
    for (ElemId x = 0; x < n; ++x)
      if (auto s = m.sum(a, x)) divisible.set(*s);
    const DynBitset &declared = m.upper_set(a);
    v.checked += n;
    if (!(divisible == declared)) {
      for (ElemId b = 0; b < n; ++b) {
        if (divisible.test(b) != declared.test(b)) {
          auto out = Verdict::fail(
              {m.element(a), m.element(b)},
              declared.test(b) ? "a <= b but no window x has a + x = b"
                               : "a + x = b for some x but a <= b does not hold");
          out.checked = v.checked;
          return out;
        }
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------- predicates

Verdict is_primal(const Monoid &m, ElemId x) {
  Verdict v;
  v.unchecked = m.out_of_window_pairs();
  for (auto z : m.upper_set(x).indices()) {
    for (auto [y1, y2] : m.decompositions(z)) {
      ++v.checked;
      if (!splits(m, x, y1, y2)) {
        auto out = Verdict::fail({m.element(y1), m.element(y2)},
                                 m.render(x) + " <= " + m.render(z) +
                                     " but does not split across the summands");
        out.checked = v.checked;
        out.unchecked = v.unchecked;
        return out;
      }
    }
  }
  return v;
}

Verdict is_primal(const Monoid &m, const Element &x) { return is_primal(m, m.id_of(x)); }

Verdict is_completely_primal(const Monoid &m, const Element &x) {
  Verdict v;
  for (auto d : m.divisors(m.id_of(x))) {
    auto p = is_primal(m, d);
    v.checked += p.checked;
    v.unchecked = p.unchecked;
    if (!p.holds()) {
      auto out = Verdict::fail({m.element(d)}, m.render(d) + " is not primal");
      out.checked = v.checked;
      out.unchecked = v.unchecked;
      return out;
    }
  }
  return v;
}

Verdict is_rigid(const Monoid &m, ElemId r) {
  require_not_identity(m, r, "rigidity");
  Verdict v;
  const auto &ds = m.divisors(r);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      ++v.checked;
      if (!m.leq(ds[i], ds[j]) && !m.leq(ds[j], ds[i])) {
        auto out = Verdict::fail({m.element(ds[i]), m.element(ds[j])},
                                 "incomparable divisors");
        out.checked = v.checked;
        return out;
      }
    }
  return v;
}

Verdict is_rigid(const Monoid &m, const Element &r) { return is_rigid(m, m.id_of(r)); }

Verdict is_homogeneous(const Monoid &m, ElemId h) {
  require_not_identity(m, h, "homogeneity");
  Verdict v;
  const DynBitset &pos = m.positive_set();
  std::vector<ElemId> ds;
  for (auto d : m.divisors(h))
    if (pos.test(d)) ds.push_back(d);
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      ++v.checked;
      if (!pos.intersects(m.lower_set(ds[i]), m.lower_set(ds[j]))) {
        auto out = Verdict::fail({m.element(ds[i]), m.element(ds[j])},
                                 "no strictly positive common lower bound");
        out.checked = v.checked;
        return out;
      }
    }
  return v;
}

Verdict is_homogeneous(const Monoid &m, const Element &h) {
  return is_homogeneous(m, m.id_of(h));
}

Verdict is_prime_quantum(const Monoid &m, const Element &qe, unsigned nmax) {
  if (nmax < 1) throw PreconditionUnmet("nmax must be at least 1");
  const ElemId q = m.id_of(qe);
  require_not_identity(m, q, "prime quanta");
  Verdict v;
  std::string inconclusive;
  auto fail = [&](std::vector<ElemId> w, std::string why) {
    auto out = Verdict::fail(to_elements(m, w), std::move(why));
    out.checked = v.checked;
    out.unchecked = v.unchecked;
    return out;
  };

  // Every non-identity divisor r has q <= n·r for some n <= nmax.
  for (auto r : m.divisors(q)) {
    if (r == m.identity()) continue;
    bool found = false;
    bool left_window = false;
    for (unsigned n = 1; n <= nmax; ++n) {
      auto nr = multiple(m, r, n);
      if (!nr) {
        left_window = true;
        break;
      }
      ++v.checked;
      if (m.leq(q, *nr)) {
        found = true;
        break;
      }
    }
    if (!found && !left_window)
      return fail({r}, "q is below no multiple n·r with n <= " +
                           std::to_string(nmax));
    if (!found) {
      ++v.unchecked;
      if (inconclusive.empty())
        inconclusive = "the multiple test for " + m.render(r) + " needs multiples outside the window";
    }
  }

  std::vector<ElemId> powers;
  for (unsigned n = 1; n <= nmax; ++n) {
    auto nq = multiple(m, q, n);
    if (!nq) {
      ++v.unchecked;
      if (inconclusive.empty())
        inconclusive = std::to_string(n) + "·" + m.render(q) + " leaves the window";
      break;
    }
    powers.push_back(*nq);
  }

  // Divisors of every n·q form a chain.
  for (auto p : powers) {
    const auto &ds = m.divisors(p);
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        ++v.checked;
        if (!m.leq(ds[i], ds[j]) && !m.leq(ds[j], ds[i]))
          return fail({ds[i], ds[j]}, "incomparable divisors of " + m.render(p));
      }
  }

  // Every divisor of every n·q is primal.
  std::map<ElemId, bool> primal;
  for (auto p : powers)
    for (auto t : m.divisors(p)) {
      auto it = primal.find(t);
      if (it == primal.end()) {
        auto pv = is_primal(m, t);
        v.checked += pv.checked;
        it = primal.emplace(t, pv.holds()).first;
      }
      if (!it->second)
        return fail({t}, "divisor " + m.render(t) + " of " + m.render(p) +
                             " is not primal");
    }

  if (!inconclusive.empty()) {
    auto out = Verdict::inconclusive_because(inconclusive);
    out.checked = v.checked;
    out.unchecked = v.unchecked;
    return out;
  }
  return v;
}

bool are_disjoint(const Monoid &m, ElemId x, ElemId y) {
  DynBitset common = m.lower_set(x) & m.lower_set(y);
  return common.count() == 1 && common.test(m.identity());
}

bool are_disjoint(const Monoid &m, const Element &x, const Element &y) {
  return are_disjoint(m, m.id_of(x), m.id_of(y));
}

Verdict check_pre_riesz(const Monoid &m, unsigned max_arity) {
  if (max_arity < 2) throw PreconditionUnmet("max_arity must be at least 2");
  Verdict v;
  const std::size_t n = m.size();

  // upper directedness
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = a + 1; b < n; ++b) {
      if (m.upper_set(a).intersects(m.upper_set(b))) {
        ++v.checked;
        continue;
      }
      if (m.sum(a, b)) {
        auto out = Verdict::fail({m.element(a), m.element(b)},
                                 "pair has no upper bound in the window");
        out.checked = v.checked;
        return out;
      }
      ++v.unchecked;
    }

  const auto pos = m.positive_ids();
  const DynBitset &posset = m.positive_set();
  const DynBitset &below_identity = m.lower_set(m.identity());
  std::vector<ElemId> tuple;
  std::optional<Verdict> failure;

  std::function<void(std::size_t, const DynBitset &)> dfs =
      [&](std::size_t start, const DynBitset &acc) {
        for (std::size_t i = start; i < pos.size() && !failure; ++i) {
          DynBitset lower = tuple.empty() ? m.lower_set(pos[i])
                                          : acc & m.lower_set(pos[i]);
          tuple.push_back(pos[i]);
          const bool has_positive = lower.intersects(posset);
          if (tuple.size() >= 2) {
            ++v.checked;
            if (!has_positive && greatest_of(m, lower) != m.identity()) {
              failure = Verdict::fail(
                  to_elements(m, tuple),
                  "no strictly positive common lower bound and glb is not the identity");
              tuple.pop_back();
              return;
            }
          }
          if (tuple.size() < max_arity) {
            if (!has_positive && lower.is_subset_of(below_identity)) {
              // Every extension keeps the identity as glb.
              const std::size_t rest = pos.size() - i - 1;
              for (std::size_t extra = 1; tuple.size() + extra <= max_arity; ++extra)
                v.checked += binom(rest, extra);
            } else {
              dfs(i + 1, lower);
            }
          }
          tuple.pop_back();
        }
      };
  dfs(0, DynBitset(n));
  if (failure) {
    failure->checked = v.checked;
    failure->unchecked = v.unchecked;
    return *failure;
  }
  return v;
}

// ---------------------------------------------------------------- bases

DisjointBound max_disjoint_below(const Monoid &m, ElemId x, const DynBitset &pool,
                                 std::size_t cap) {
  DynBitset cand = m.lower_set(x) & m.positive_set();
  cand &= pool;
  return max_disjoint_family(m, cand.indices(), cap);
}

DisjointBound conrad_F_bound(const Monoid &m, const Element &x, std::size_t cap) {
  ElemId id = m.id_of(x);
  if (!m.is_strictly_positive(id))
    throw PreconditionUnmet(m.render(x) + " is not strictly positive");
  return max_disjoint_below(m, id, m.positive_set(), cap);
}

DynBitset homogeneous_set(const Monoid &m) {
  const auto pos = m.positive_ids();
  auto flags = parallel_map<char>(pos.size(), [&](std::size_t i) {
    return static_cast<char>(is_homogeneous(m, pos[i]).holds());
  });
  DynBitset out(m.size());
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (flags[i]) out.set(pos[i]);
  return out;
}

Verdict verify_basis(const Monoid &m, const std::vector<Element> &S) {
  if (S.empty()) throw PreconditionUnmet("basis candidate is empty");
  std::vector<ElemId> ids = ids_of(m, S);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  DynBitset inS(m.size());
  for (auto s : ids) {
    if (!m.is_strictly_positive(s))
      throw PreconditionUnmet(m.render(s) + " is not strictly positive");
    inS.set(s);
  }
  Verdict v;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      ++v.checked;
      if (!are_disjoint(m, ids[i], ids[j])) {
        auto out = Verdict::fail({m.element(ids[i]), m.element(ids[j])},
                                 "members are not disjoint");
        out.checked = v.checked;
        return out;
      }
    }
  const auto pos = m.positive_ids();
  for (auto s : ids) {
    // Candidates must already be disjoint from the rest of S.
    std::vector<ElemId> cand;
    for (auto x : pos) {
      if (inS.test(x) && x != s) continue;
      bool ok = true;
      for (auto t : ids)
        if (t != s && !are_disjoint(m, x, t)) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(x);
    }
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        ++v.checked;
        if (are_disjoint(m, cand[i], cand[j])) {
          auto out = Verdict::fail(
              {m.element(s), m.element(cand[i]), m.element(cand[j])},
              "s can be replaced by two disjoint elements");
          out.checked = v.checked;
          return out;
        }
      }
  }
  return v;
}

BasisResult find_basis(const Monoid &m) {
  BasisResult res;
  const DynBitset hom = homogeneous_set(m);
  for (auto x : m.positive_ids())
    if (!m.lower_set(x).intersects(hom)) {
      res.basis = NoBasis{m.element(x)};
      res.certified = true;
      res.certification = Verdict::fail({m.element(x)},
                                        "exceeds no homogeneous element");
      return res;
    }
  std::vector<ElemId> chosen;
  for (auto h : hom.indices()) {
    bool ok = true;
    for (auto c : chosen)
      if (!are_disjoint(m, h, c)) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(h);
  }
  if (chosen.empty()) {
    // Only the trivial monoid has no positive element.
    res.basis = std::vector<Element>{};
    res.certified = true;
    return res;
  }
  auto members = to_elements(m, chosen);
  res.certification = verify_basis(m, members);
  res.certified = res.certification.holds();
  res.basis = std::move(members);
  return res;
}

DisjointnessReport check_disjointness_equivalence(
    const Monoid &m, const std::optional<std::vector<Element>> &gamma,
    std::size_t cap) {
  DisjointnessReport rep;
  const auto pos = m.positive_ids();

  auto bounded = [&](const DynBitset &pool, bool need_member, const char *what) {
    Verdict v;
    for (auto x : pos) {
      ++v.checked;
      if (need_member && !m.lower_set(x).intersects(pool)) {
        auto out = Verdict::fail({m.element(x)},
                                 std::string("exceeds no ") + what);
        out.checked = v.checked;
        return out;
      }
      auto b = max_disjoint_below(m, x, pool, cap);
      if (std::holds_alternative<ExceedsCap>(b)) {
        auto out = Verdict::fail({m.element(x)},
                                 std::string("more than ") + std::to_string(cap) +
                                     " mutually disjoint " + what + " below");
        out.checked = v.checked;
        return out;
      }
    }
    return v;
  };

  rep.f_condition = bounded(m.positive_set(), false, "positive elements");
  const DynBitset hom = homogeneous_set(m);
  rep.homogeneous_form = bounded(hom, true, "homogeneous elements");
  DynBitset pool = hom;
  rep.default_gamma = !gamma.has_value();
  if (gamma) {
    pool = DynBitset(m.size());
    for (const auto &g : *gamma) {
      ElemId id = m.id_of(g);
      if (!m.is_strictly_positive(id))
        throw PreconditionUnmet(m.render(g) + " is not strictly positive");
      pool.set(id);
    }
  }
  rep.gamma_form = bounded(pool, true, "members of the family");
  const bool i = rep.f_condition.holds();
  const bool ii = rep.homogeneous_form.holds();
  const bool iii = rep.gamma_form.holds();
  rep.contract_holds = (i == ii) && (!iii || i) && (!rep.default_gamma || iii == ii);
  return rep;
}

SumBoundReport sum_upper_bound_unchecked(const Monoid &m, ElemId a, ElemId b) {
  if (!m.is_strictly_positive(a) || !m.is_strictly_positive(b))
    throw PreconditionUnmet("both arguments must be strictly positive");
  auto s = m.sum(a, b);
  if (!s) throw PreconditionUnmet("a + b leaves the window");
  SumBoundReport r;
  r.glb_zero = glb_id(m, {a, b}) == m.identity();
  DynBitset ub = m.upper_set(a) & m.upper_set(b);
  r.minimal = ub.test(*s) && (m.lower_set(*s) & ub).count() == 1;
  r.least = ub.test(*s) && ub.is_subset_of(m.upper_set(*s));
  r.minimal_reading_holds = r.glb_zero == r.minimal;
  r.least_reading_holds = r.glb_zero == r.least;
  return r;
}

SumBoundReport check_sum_upper_bound(const Monoid &m, const Element &a,
                                     const Element &b) {
  if (!check_cancellative(m).holds())
    throw HypothesisUnmet(m.id() + " is not cancellative");
  if (!check_divisibility_order(m).holds())
    throw HypothesisUnmet(m.id() + " is not divisibility ordered");
  if (check_pre_riesz(m, 2).fails())
    throw HypothesisUnmet(m.id() + " is not pre-Riesz");
  return sum_upper_bound_unchecked(m, m.id_of(a), m.id_of(b));
}

} // namespace ordalg
