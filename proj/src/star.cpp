#include "ordalg/star.hpp"

#include "ordalg/error.hpp"
#include "ordalg/riesz.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ordalg {

namespace {

constexpr Int kPerturbationRadius = 2;
constexpr Int kSpotCheckRadius = 3;

bool t_proper(const FractionalIdeal &I) { return !t_closure(I).is_unit_ideal(); }

Int integral_norm(const FractionalIdeal &I) {
  Rational n = I.norm();
  if (n.den != 1) throw PreconditionUnmet(I.render() + " is not integral");
  return n.num;
}

/// Elements u + v w with max(|u|, |v|) <= h in canonical order.
std::vector<RingElement> box_elements(const QuadraticRing &R, Int h) {
  std::vector<RingElement> out;
  for (Int u = -h; u <= h; ++u)
    for (Int v = -h; v <= h; ++v) out.push_back({u, v});
  std::sort(out.begin(), out.end(),
            [&](const RingElement &x, const RingElement &y) { return element_less(R, x, y); });
  return out;
}

template <class Pred>
RingElement first_by_height(const QuadraticRing &R, Pred pred) {
  for (Int h = 1; h <= 1 << 12; h *= 2)
    for (const auto &x : box_elements(R, h))
      if (pred(x)) return x;
  throw NormTooLarge("no element found within the height search limit");
}

void require_nonunit(const QuadraticRing &R, const RingElement &x) {
  if (x.a == 0 && x.b == 0) throw ZeroIdeal("zero element");
  if (is_unit(R, x)) throw UnitInput(render(x) + " is a unit");
}

void insert_sorted_unique(std::vector<FractionalIdeal> &v, const FractionalIdeal &I) {
  auto it = std::lower_bound(v.begin(), v.end(), I);
  if (it == v.end() || !(*it == I)) v.insert(it, I);
}

Monoid ideal_table(const std::vector<FractionalIdeal> &ideals, Int bound,
                   const std::string &label) {
  std::map<std::tuple<Int, Int, Int, Int>, std::size_t> index;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    index[{ideals[i].a(), ideals[i].b(), ideals[i].c(), ideals[i].den()}] = i;
  const std::size_t n = ideals.size();
  TableSpec spec;
  spec.add.assign(n, std::vector<std::optional<std::size_t>>(n));
  spec.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    spec.names.push_back(ideals[i].render());
    for (std::size_t j = 0; j < n; ++j) {
      spec.leq[i][j] = ideals[j].subset_of(ideals[i]);
      if (j < i) {
        spec.add[i][j] = spec.add[j][i];
        continue;
      }
      FractionalIdeal p = t_closure(multiply(ideals[i], ideals[j]));
      if (integral_norm(p) > bound) continue;
      auto it = index.find({p.a(), p.b(), p.c(), p.den()});
      if (it == index.end())
        throw ContractViolation("product " + p.render() + " is missing from the window");
      spec.add[i][j] = it->second;
    }
  }
  return Monoid::table(std::move(spec), Backend::IdealAdapter, label);
}

} // namespace

std::vector<FractionalIdeal> maximal_t_ideals_containing(const FractionalIdeal &I,
                                                         Int factor_limit) {
  const auto &R = I.ring();
  if (!I.is_integral()) throw PreconditionUnmet(I.render() + " is not integral");
  if (I.is_unit_ideal()) throw PreconditionUnmet("the unit ideal is not proper");
  if (R.conductor() != 1 && !sum(I, conductor_ideal(R)).is_unit_ideal())
    throw Unsupported(I.render() + " is not comaximal with the conductor of " + R.id());
  std::vector<FractionalIdeal> out;
  for (auto [p, e] : factor(integral_norm(I), factor_limit)) {
    (void)e;
    for (const auto &P : primes_above(R, p))
      if (I.subset_of(P)) out.push_back(P);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(const FractionalIdeal &I, const FractionalIdeal &P) {
  if (P.is_unit_ideal()) throw PreconditionUnmet("valuation at the unit ideal");
  unsigned k = 0;
  FractionalIdeal Q = P;
  while (I.subset_of(Q)) {
    ++k;
    Q = multiply(Q, P);
  }
  return k;
}

std::vector<FractionalIdeal> t_ideals_containing(const FractionalIdeal &I, Int bound) {
  const auto &R = I.ring();
  auto maxes = maximal_t_ideals_containing(I);
  std::vector<unsigned> exps;
  for (const auto &P : maxes) exps.push_back(valuation(I, P));

  std::vector<FractionalIdeal> out;
  std::vector<unsigned> f(maxes.size(), 0);
  std::function<void(std::size_t, FractionalIdeal)> rec = [&](std::size_t i,
                                                                FractionalIdeal acc) {
    if (integral_norm(acc) > bound) return;
    if (i == maxes.size()) {
      if (!acc.is_unit_ideal()) insert_sorted_unique(out, t_closure(acc));
      return;
    }
    FractionalIdeal cur = acc;
    for (unsigned k = 0; k <= exps[i]; ++k) {
      if (integral_norm(cur) > bound) break;
      rec(i + 1, cur);
      cur = multiply(cur, maxes[i]);
    }
  };
  rec(0, FractionalIdeal::unit(R));

  for (const auto &x : box_elements(R, kPerturbationRadius)) {
    if (x.a == 0 && x.b == 0) continue;
    FractionalIdeal J = t_closure(sum(I, FractionalIdeal::principal(R, x)));
    if (J.is_unit_ideal() || integral_norm(J) > bound) continue;
    if (!std::binary_search(out.begin(), out.end(), J))
      throw ContractViolation(J.render() + " contains " + I.render() +
                              " but is missing from its divisor lattice");
  }
  return out;
}

IdealVerdict is_homogeneous_ideal(const FractionalIdeal &I) {
  auto maxes = maximal_t_ideals_containing(t_closure(I));
  IdealVerdict v;
  v.checked = maxes.size();
  if (maxes.size() == 1) return v;
  auto out = IdealVerdict::fail(maxes, I.render() + " lies in " +
                                           std::to_string(maxes.size()) +
                                           " maximal t-ideals");
  out.checked = maxes.size();
  return out;
}

FractionalIdeal M_of(const FractionalIdeal &I) {
  auto maxes = maximal_t_ideals_containing(t_closure(I));
  if (maxes.size() != 1)
    throw NotHomogeneous(I.render() + " lies in " + std::to_string(maxes.size()) +
                         " maximal t-ideals");
  const FractionalIdeal &M = maxes.front();
  for (const auto &x : box_elements(I.ring(), kSpotCheckRadius)) {
    if (x.a == 0 && x.b == 0) continue;
    bool proper = t_proper(sum(I, FractionalIdeal::principal(I.ring(), x)));
    if (proper != M.contains(x))
      throw ContractViolation("(" + render(x) + ", I) properness disagrees with membership in " +
                              M.render());
  }
  return M;
}

PairwiseSumsReport check_pairwise_proper_sums(const FractionalIdeal &I, Int bound) {
  PairwiseSumsReport rep;
  auto Xs = t_ideals_containing(I, bound);
  rep.ideals = Xs.size();
  for (std::size_t i = 0; i < Xs.size() && !rep.verdict.fails(); ++i)
    for (std::size_t j = i + 1; j < Xs.size(); ++j) {
      ++rep.verdict.checked;
      if (t_proper(sum(Xs[i], Xs[j]))) continue;
      std::size_t checked = rep.verdict.checked;
      rep.verdict = IdealVerdict::fail({Xs[i], Xs[j]}, "t(" + Xs[i].render() + " + " +
                                                            Xs[j].render() + ") = R");
      rep.verdict.checked = checked;
      break;
    }
  rep.agrees = rep.verdict.holds() == is_homogeneous_ideal(I).holds();
  return rep;
}

HomogeneousConstruction build_homogeneous_from(const QuadraticRing &R, const RingElement &x,
                                               const std::optional<FractionalIdeal> &target) {
  require_nonunit(R, x);
  FractionalIdeal xR = FractionalIdeal::principal(R, x);
  auto maxes = maximal_t_ideals_containing(xR);
  FractionalIdeal M = maxes.front();
  if (target) {
    if (std::find(maxes.begin(), maxes.end(), *target) == maxes.end())
      throw PreconditionUnmet(target->render() + " does not contain " + render(x));
    M = *target;
  }
  HomogeneousConstruction out{t_closure(xR), M, {}, {}};
  if (maxes.size() == 1) return out;
  std::vector<RingElement> gens{x};
  for (const auto &Mi : maxes) {
    if (Mi == M) continue;
    RingElement xi = first_by_height(
        R, [&](const RingElement &y) { return M.contains(y) && !Mi.contains(y); });
    out.others.push_back(Mi);
    out.chosen.push_back(xi);
    gens.push_back(xi);
  }
  out.ideal = t_closure(FractionalIdeal::from_generators(R, gens));
  if (!(M_of(out.ideal) == M))
    throw ContractViolation("constructed ideal " + out.ideal.render() +
                            " is not homogeneous under " + M.render());
  return out;
}

IdealVerdict is_f_rigid(const QuadraticRing &R, const RingElement &r, Int bound) {
  require_nonunit(R, r);
  FractionalIdeal rR = FractionalIdeal::principal(R, r);
  auto maxes = maximal_t_ideals_containing(rR);
  if (maxes.size() != 1)
    return IdealVerdict::fail(maxes, render(r) + " lies in " + std::to_string(maxes.size()) +
                                         " maximal t-ideals");
  IdealVerdict v;
  for (const auto &J : t_ideals_containing(rR, bound)) {
    ++v.checked;
    if (maximal_t_ideals_containing(J) != maxes)
      throw ContractViolation(J.render() + " above a homogeneous principal ideal is not homogeneous");
    if (!is_principal(J)) {
      auto out = IdealVerdict::fail({J}, J.render() + " is homogeneous, contains " + render(r) +
                                             " and is not principal");
      out.checked = v.checked;
      return out;
    }
  }
  return v;
}

MaximalIdealScan maximal_t_ideals_up_to(const QuadraticRing &R, Int bound) {
  MaximalIdealScan scan;
  for (Int p = 2; p <= bound; ++p) {
    bool prime = true;
    for (Int q = 2; q * q <= p; ++q)
      if (p % q == 0) { prime = false; break; }
    if (!prime) continue;
    try {
      for (const auto &P : primes_above(R, p))
        if (integral_norm(P) <= bound) scan.ideals.push_back(P);
    } catch (const Unsupported &e) {
      scan.skipped.push_back(e.what());
    }
  }
  std::sort(scan.ideals.begin(), scan.ideals.end());
  return scan;
}

PotencyReport potency_report(const QuadraticRing &R, Int norm_bound) {
  PotencyReport rep;
  auto scan = maximal_t_ideals_up_to(R, norm_bound);
  rep.skipped = scan.skipped;
  for (const auto &M : scan.ideals) {
    RingElement seed = first_by_height(R, [&](const RingElement &y) {
      return !(y.a == 0 && y.b == 0) && M.contains(y);
    });
    auto built = build_homogeneous_from(R, seed, M);
    PotencyEntry entry{M, seed, built.ideal, std::nullopt};

    Int nm = integral_norm(M);
    Int p = factor(nm).front().first;
    for (Int m = p; m <= nm * nm && !entry.f_rigid; m *= p) {
      for (const auto &r : elements_of_norm(R, m)) {
        if (!M.contains(r)) continue;
        if (maximal_t_ideals_containing(FractionalIdeal::principal(R, r)) !=
            std::vector<FractionalIdeal>{M})
          continue;
        if (is_f_rigid(R, r, m).holds()) {
          entry.f_rigid = r;
          break;
        }
      }
    }
    rep.f_potent = rep.f_potent && entry.f_rigid.has_value();
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

ComaximalCount comaximal_family_count(const FractionalIdeal &A, Int bound) {
  auto Xs = t_ideals_containing(A, bound);
  const std::size_t n = Xs.size();
  std::vector<DynBitset> adj(n, DynBitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!t_proper(sum(Xs[i], Xs[j]))) {
        adj[i].set(j);
        adj[j].set(i);
      }
  std::vector<std::size_t> best, cur;
  std::function<void(DynBitset)> grow = [&](DynBitset cand) {
    if (cur.size() + cand.count() <= best.size()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    for (std::size_t v : cand.indices()) {
      if (!cand.test(v)) continue;
      cur.push_back(v);
      grow(cand & adj[v]);
      cur.pop_back();
      cand.reset(v);
      if (cur.size() + cand.count() <= best.size()) break;
    }
    if (cur.size() > best.size()) best = cur;
  };
  DynBitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  grow(all);

  ComaximalCount out;
  out.count = best.size();
  for (std::size_t i : best) out.family.push_back(Xs[i]);
  out.expected = maximal_t_ideals_containing(A).size();
  out.agrees = out.count == out.expected;
  return out;
}

std::optional<RingElement> common_nonunit_divisor(const FractionalIdeal &A) {
  const auto &R = A.ring();
  if (A.is_unit_ideal()) return std::nullopt;
  Int n = integral_norm(A);
  for (Int m = 2; m <= n; ++m) {
    if (n % m != 0) continue;
    for (const auto &a : elements_of_norm(R, m))
      if (A.subset_of(FractionalIdeal::principal(R, a))) return a;
  }
  return std::nullopt;
}

PspReport psp_probe(const QuadraticRing &R, const std::vector<RingElement> &coefficients) {
  std::vector<RingElement> nz;
  for (const auto &c : coefficients)
    if (!(c.a == 0 && c.b == 0)) nz.push_back(c);
  FractionalIdeal A = FractionalIdeal::from_generators(R, nz);
  FractionalIdeal Av = v_closure(A);
  PspReport rep{A, Av, false, Av.is_unit_ideal(), common_nonunit_divisor(A)};
  rep.primitive = !rep.common_divisor.has_value();
  return rep;
}

ElementVerdict property_P_check(const QuadraticRing &R,
                                const std::vector<std::vector<RingElement>> &tuples) {
  ElementVerdict v;
  for (const auto &tuple : tuples) {
    for (const auto &x : tuple)
      if (x.a == 0 && x.b == 0) throw PreconditionUnmet("property (P) tuples must be nonzero");
    ++v.checked;
    FractionalIdeal A = FractionalIdeal::from_generators(R, tuple);
    if (v_closure(A).is_unit_ideal()) continue;
    if (common_nonunit_divisor(A)) continue;
    auto out = ElementVerdict::fail(tuple, "v-closure " + v_closure(A).render() +
                                               " is proper and no common non-unit divisor exists");
    out.checked = v.checked;
    return out;
  }
  return v;
}

StarFim export_star_fim(const QuadraticRing &R, Int norm_bound) {
  std::vector<FractionalIdeal> ideals;
  for (const auto &I : enumerate_integral_ideals(R, std::max<Int>(norm_bound, 1)))
    if (t_closure(I) == I) ideals.push_back(I);
  StarFim fim{ideal_table(ideals, norm_bound, "fim:" + R.id()), ideals, {}};

  const auto &m = fim.monoid;
  for (ElemId i = 0; i < ideals.size(); ++i)
    for (ElemId j = i; j < ideals.size(); ++j) {
      ++fim.inf_is_t_sum.checked;
      FractionalIdeal ts = t_closure(sum(ideals[i], ideals[j]));
      auto g = glb_id(m, {i, j});
      if (g && ideals[*g] == ts) continue;
      auto out = IdealVerdict::fail({ideals[i], ideals[j]},
                                    "window glb differs from t(" + ideals[i].render() + " + " +
                                        ideals[j].render() + ") = " + ts.render());
      out.checked = fim.inf_is_t_sum.checked;
      fim.inf_is_t_sum = out;
      return fim;
    }
  return fim;
}

SchreierReport schreier_probe(const QuadraticRing &R, Int norm_bound) {
  SchreierReport rep;
  for (const auto &I : enumerate_integral_ideals(R, std::max<Int>(norm_bound, 1)))
    if (t_closure(I) == I && is_t_invertible(I)) rep.ideals.push_back(I);
  rep.size = rep.ideals.size();
  Monoid m = ideal_table(rep.ideals, norm_bound, "inv:" + R.id());
  rep.all_primal = check_all_primal(m);
  for (const auto &I : rep.ideals) {
    ++rep.all_principal.checked;
    if (is_principal(I)) continue;
    std::size_t checked = rep.all_principal.checked;
    rep.all_principal = IdealVerdict::fail({I}, I.render() + " is not principal");
    rep.all_principal.checked = checked;
    break;
  }
  rep.consistent = !rep.all_principal.holds() || rep.all_primal.holds();
  return rep;
}

std::vector<FractionalIdeal> closure_fixtures(const QuadraticRing &R, std::size_t count) {
  std::vector<FieldElement> gens;
  for (Int den = 1; den <= 5; ++den)
    for (Int b = -6; b <= 6; ++b)
      for (Int a = -6; a <= 6; ++a)
        if (a != 0 || b != 0) gens.push_back({a, b, den});
  const std::size_t n = gens.size();
  std::vector<FractionalIdeal> out;
  // Pairs (i, i + s) for growing offsets s, so early fixtures mix small and
  // large generators.
  for (std::size_t k = 0; out.size() < count && k < n * n; ++k) {
    const std::size_t i = k % n;
    const std::size_t j = (i + 1 + k / n) % n;
    auto I = FractionalIdeal::from_generators(R, {gens[i], gens[j]});
    if (std::find(out.begin(), out.end(), I) == out.end()) out.push_back(std::move(I));
  }
  return out;
}

IdealVerdict check_closure_laws(const std::vector<FractionalIdeal> &ideals, StarKind k) {
  IdealVerdict v;
  auto fail = [&](std::vector<FractionalIdeal> w, const std::string &law) {
    auto out = IdealVerdict::fail(std::move(w), std::string(to_string(k)) + ": " + law);
    out.checked = v.checked;
    return out;
  };
  if (ideals.empty()) return v;
  const QuadraticRing &R = ideals.front().ring();
  auto star = [&](const FractionalIdeal &I) { return closure(k, I); };

  ++v.checked;
  if (!(star(FractionalIdeal::unit(R)) == FractionalIdeal::unit(R)))
    return fail({FractionalIdeal::unit(R)}, "R* = R");
  const std::vector<FieldElement> scalars = {{2, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}, {3, -1, 1}};
  std::vector<FractionalIdeal> closed;
  closed.reserve(ideals.size());
  for (const auto &A : ideals) {
    auto As = star(A);
    v.checked += 2;
    if (!A.subset_of(As)) return fail({A}, "A ⊆ A*");
    if (!(star(As) == As)) return fail({A}, "(A*)* = A*");
    for (const auto &x : scalars) {
      ++v.checked;
      if (!(star(scale(A, x)) == scale(As, x))) return fail({A}, "(xA)* = xA*");
    }
    closed.push_back(std::move(As));
  }
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      const auto &A = ideals[i], &B = ideals[j];
      const auto &As = closed[i], &Bs = closed[j];
      v.checked += 3;
      if (A.subset_of(B) && !As.subset_of(Bs)) return fail({A, B}, "A ⊆ B => A* ⊆ B*");
      if (B.subset_of(A) && !Bs.subset_of(As)) return fail({B, A}, "A ⊆ B => A* ⊆ B*");
      if (!(star(multiply(A, B)) == star(multiply(As, Bs))))
        return fail({A, B}, "(AB)* = (A*B*)*");
    }

  // Absorption of a larger ideal into a t-comaximal sum, over the integral
  // proper t-ideals among the closures.
  std::vector<FractionalIdeal> proper;
  for (const auto &I : closed)
    if (I.is_integral() && !I.is_unit_ideal() && t_closure(I) == I &&
        std::find(proper.begin(), proper.end(), I) == proper.end())
      proper.push_back(I);
  const auto unit = FractionalIdeal::unit(R);
  for (const auto &A : proper)
    for (const auto &B : proper) {
      if (!(t_closure(sum(A, B)) == unit)) continue;
      for (const auto &C : proper) {
        if (!B.subset_of(C)) continue;
        ++v.checked;
        if (!(t_closure(sum(A, C)) == unit))
          return fail({A, B, C}, "(A + B)_t = R, B ⊆ C => (A + C)_t = R");
      }
    }
  return v;
}

} // namespace ordalg
