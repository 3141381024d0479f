#include "ordalg/report.hpp"

#include "ordalg/error.hpp"
#include "ordalg/order.hpp"
#include "ordalg/riesz.hpp"
#include "ordalg/star.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace ordalg {

using nlohmann::json;

namespace {

template <class W, class Render>
CheckRecord record(std::string name, std::string anchor, const BasicVerdict<W> &v,
                   Render render) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.status = v.status;
  for (const auto &w : v.witness) r.witness.push_back(render(w));
  r.reason = v.reason;
  r.checked = v.checked;
  r.unchecked = v.unchecked;
  return r;
}

CheckRecord inconclusive(std::string name, std::string anchor, std::string why) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.status = Status::WindowInconclusive;
  r.reason = std::move(why);
  return r;
}

std::string join(const std::vector<std::string> &v, const char *sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string window_description(const Instance &inst) {
  const Monoid &m = inst.monoid;
  std::string n = std::to_string(m.window());
  switch (m.backend()) {
  case Backend::NaturalAdd:
  case Backend::NumericalSemigroup: return "values <= " + n;
  case Backend::BlockMonoid: return "sequence length <= " + n;
  case Backend::FreeCommutative: return "L1 norm <= " + n;
  case Backend::PositiveIntegersMul: return "integers <= " + n;
  case Backend::Table: return n + " table elements";
  case Backend::IdealAdapter:
    if (inst.ring)
      return "ideal norm <= " + std::to_string(inst.norm_bound) + " (" +
             std::to_string(m.size()) + " ideals)";
    return n + " table elements";
  }
  return n;
}

class Runner {
public:
  Runner(const Instance &inst, const AnalysisOptions &opts, AnalysisReport &out)
      : inst_(inst), m_(inst.monoid), opts_(opts), out_(out) {}

  void order_suite() {
    timed([&] {
      return record("cancellative", "a + b = a + c implies b = c", cancellative(), el());
    });
    timed([&] {
      return record("conic", "x + y = 0 only when x = y = 0", check_conic(m_), el());
    });
    timed([&] {
      return record("divisibility-order", "the declared order is divisibility",
                    divisibility(), el());
    });
    timed([&] {
      auto r = record("pre-riesz",
                      "upper directed, and every set of at most " +
                          std::to_string(opts_.max_arity) +
                          " strictly positive elements has glb 0 or a strictly positive "
                          "common lower bound",
                      check_pre_riesz(m_, opts_.max_arity), el());
      return r;
    });
    timed([&] {
      CheckRecord r;
      r.name = "atoms";
      r.anchor = "strictly positive elements with no proper decomposition";
      for (const auto &a : m_.atoms()) r.witness.push_back(m_.render(a));
      r.detail = join(r.witness);
      r.witness.clear();
      r.checked = m_.size();
      return r;
    });
    timed([&] { return basis_check(); });
    timed([&] { return disjointness_check(); });
    timed([&] { return rigid_implies_homogeneous(); });
    timed([&] { return quantum_implies_rigid(); });
    sum_bound_checks();
  }

  void riesz_suite() {
    if (!cancellative().holds() || !divisibility().holds()) {
      out_.checks.push_back(inconclusive(
          "interpolation-equivalence", "all-primal, (2,2)- and (n,m)-interpolation agree",
          "needs a cancellative window ordered by divisibility"));
      return;
    }
    EquivalenceReport eq;
    auto t0 = std::chrono::steady_clock::now();
    eq = check_riesz_monoid(m_, opts_.max_arity);
    double ms = elapsed(t0);
    auto push = [&](CheckRecord r) {
      r.elapsed_ms = opts_.timings ? ms : 0;
      out_.checks.push_back(std::move(r));
    };
    push(record("all-primal", "every element x <= y1 + y2 splits as x1 + x2 with xi <= yi",
                eq.all_primal, el()));
    push(record("interpolation-22", "a, b <= x, y implies some z with a, b <= z <= x, y",
                eq.interpolation_22, el()));
    auto nm = record("interpolation-nm",
                     "finite sets A <= B (sizes up to " + std::to_string(opts_.max_arity) +
                         ") admit some z with A <= z <= B",
                     eq.interpolation_nm, el());
    nm.detail = "arity <= " + std::to_string(opts_.max_arity);
    push(nm);
    timed([&] {
      return record("interpolation-modes-agree",
                    "constructive and search interpolation agree on every quadruple",
                    check_interpolation_modes_agree(m_), el());
    });
    if (!eq.equivalence_holds)
      fail_suite("all-primal, interpolation-22 and interpolation-nm disagree");
    if (!eq.implications_hold)
      fail_suite("all-primal holds but pre-riesz or conic fails");
    const auto *mode = out_.find("interpolation-modes-agree");
    if (mode && mode->status == Status::FailsWith && eq.all_primal.holds())
      fail_suite("constructive interpolation disagrees with search");
    timed([&] { return group_check(eq.all_primal.holds()); });
  }

  void ideal_suite() {
    if (!inst_.ring) throw SchemaError("the ideal suite needs a monoid of t-ideals (fim:<d>)");
    const auto &ideals = inst_.ideals;
    const Int bound = inst_.norm_bound;
    auto ir = [](const FractionalIdeal &I) { return I.render(); };

    timed([&] {
      IdealVerdict v;
      const auto &m = m_;
      for (ElemId i = 0; i < ideals.size() && v.holds(); ++i)
        for (ElemId j = i; j < ideals.size(); ++j) {
          ++v.checked;
          auto g = glb_id(m, {i, j});
          FractionalIdeal ts = t_closure(sum(ideals[i], ideals[j]));
          if (g && ideals[*g] == ts) continue;
          auto c = v.checked;
          v = IdealVerdict::fail({ideals[i], ideals[j]}, "glb differs from t(H + K)");
          v.checked = c;
          break;
        }
      if (v.fails()) fail_suite("window glb differs from the t-closure of the sum");
      return record("inf-is-t-sum", "glb(H, K) = t(H + K) for every pair", v, ir);
    });

    timed([&] {
      IdealVerdict v = check_closure_laws(ideals, StarKind::V);
      if (v.holds()) {
        auto n = v.checked;
        v = check_closure_laws(ideals, StarKind::T);
        v.checked += n;
      }
      if (v.holds())
        for (const auto &I : ideals) {
          ++v.checked;
          if (!(t_closure(I) == v_closure(I))) {
            auto c = v.checked;
            v = IdealVerdict::fail({I}, "I_t differs from I_v on a finitely generated ideal");
            v.checked = c;
            break;
          }
        }
      if (v.fails()) fail_suite("v/t closure laws violated");
      return record("closure-laws",
                    "v and t are extensive, idempotent, monotone, fix R, commute with "
                    "principal scaling and satisfy (AB)* = (A*B*)*; I_t = I_v",
                    v, ir);
    });

    guarded("homogeneity-pairwise-sums",
            "I is homogeneous iff every two proper t-ideals above I have a proper t-sum", [&] {
              IdealVerdict v;
              std::size_t agree = 0;
              for (const auto &I : ideals) {
                if (I.is_unit_ideal()) continue;
                ++v.checked;
                auto rep = check_pairwise_proper_sums(I, integral(I));
                if (rep.agrees) {
                  ++agree;
                  continue;
                }
                auto c = v.checked;
                v = IdealVerdict::fail({I}, "pairwise t-sums disagree with homogeneity");
                v.checked = c;
                fail_suite("pairwise-sum criterion disagrees with homogeneity at " + I.render());
                break;
              }
              auto r = record("", "", v, ir);
              r.detail = std::to_string(agree) + " ideals agree";
              return r;
            });

    guarded("comaximal-family-count",
            "the largest family of mutually t-comaximal t-ideals above A has one member per "
            "maximal t-ideal above A",
            [&] {
              IdealVerdict v;
              for (const auto &I : ideals) {
                if (I.is_unit_ideal()) continue;
                ++v.checked;
                auto c = comaximal_family_count(I, integral(I));
                if (c.agrees) continue;
                auto n = v.checked;
                v = IdealVerdict::fail({I}, "family of " + std::to_string(c.count) + " vs " +
                                                std::to_string(c.expected) + " maximal t-ideals");
                v.checked = n;
                fail_suite("comaximal family count mismatch at " + I.render());
                break;
              }
              return record("", "", v, ir);
            });

    guarded("potency", "every maximal t-ideal contains a t-homogeneous ideal", [&] {
      PotencyReport pr = potency_report(*inst_.ring, bound);
      IdealVerdict pot, fpot;
      std::vector<std::string> rigid;
      for (const auto &e : pr.entries) {
        ++pot.checked;
        ++fpot.checked;
        if (e.f_rigid) rigid.push_back(e.M.render() + ": " + render(*e.f_rigid));
        else if (fpot.holds())
          fpot = IdealVerdict::fail({e.M}, "no t-f-rigid element of norm <= norm(M)^2"),
          fpot.checked = pot.checked;
      }
      fpot.checked = pot.checked;
      auto r = record("", "", pot, ir);
      r.detail = std::to_string(pr.entries.size()) + " maximal t-ideals";
      if (!pr.skipped.empty()) r.detail += "; skipped: " + join(pr.skipped, "; ");
      auto f = record("f-potency", "every maximal t-ideal contains a t-f-rigid element",
                      fpot, ir);
      f.detail = join(rigid, "; ");
      pending_.push_back(std::move(f));
      return r;
    });

    guarded("invertible-all-principal",
            "every integral t-invertible t-ideal of the window is principal", [&] {
              SchreierReport s = schreier_probe(*inst_.ring, bound);
              auto r = record("", "", s.all_principal, ir);
              r.detail = std::to_string(s.size) + " t-invertible t-ideals";
              auto p = record("invertible-all-primal",
                              "every t-invertible t-ideal is primal in the t-invertible monoid",
                              s.all_primal, [&](const Element &) { return std::string(); });
              p.witness.clear();
              if (s.all_primal.fails()) p.reason = s.all_primal.reason;
              pending_.push_back(std::move(p));
              if (!s.consistent) fail_suite("all t-invertible ideals principal but not all primal");
              return r;
            });
  }

private:
  const Instance &inst_;
  const Monoid &m_;
  const AnalysisOptions &opts_;
  AnalysisReport &out_;
  std::vector<CheckRecord> pending_;
  std::optional<Verdict> cancellative_, divisibility_;

  std::function<std::string(const Element &)> el() const {
    return [this](const Element &e) { return m_.render(e); };
  }

  static double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }

  static Int integral(const FractionalIdeal &I) { return I.norm().num; }

  const Verdict &cancellative() {
    if (!cancellative_) cancellative_ = check_cancellative(m_);
    return *cancellative_;
  }
  const Verdict &divisibility() {
    if (!divisibility_) divisibility_ = check_divisibility_order(m_);
    return *divisibility_;
  }

  void fail_suite(std::string why) { out_.suite_failures.push_back(std::move(why)); }

  void timed(const std::function<CheckRecord()> &f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord r = f();
    if (opts_.timings) r.elapsed_ms = elapsed(t0);
    out_.checks.push_back(std::move(r));
    for (auto &p : pending_) out_.checks.push_back(std::move(p));
    pending_.clear();
  }

  /// Runs a check whose machinery may be unavailable for the ring.
  void guarded(const std::string &name, const std::string &anchor,
               const std::function<CheckRecord()> &f) {
    timed([&] {
      try {
        CheckRecord r = f();
        r.name = name;
        r.anchor = anchor;
        return r;
      } catch (const Unsupported &e) {
        pending_.clear();
        return inconclusive(name, anchor, e.what());
      }
    });
  }

  CheckRecord basis_check() {
    BasisResult b = find_basis(m_);
    CheckRecord r;
    r.name = "basis";
    r.anchor = "an order-maximal pairwise disjoint family of homogeneous elements";
    if (!b.found()) {
      r.status = Status::FailsWith;
      r.witness = {m_.render(std::get<NoBasis>(b.basis).witness)};
      r.reason = "a strictly positive element exceeds no homogeneous element";
      return r;
    }
    std::vector<std::string> members;
    for (const auto &e : b.members()) members.push_back(m_.render(e));
    r.detail = "{" + join(members) + "}";
    r.checked = b.certification.checked;
    if (!b.certified) {
      r.status = b.certification.status;
      for (const auto &w : b.certification.witness) r.witness.push_back(m_.render(w));
      r.reason = "replacement criterion failed: " + b.certification.reason;
      fail_suite("greedy basis is not certified by the replacement criterion");
    }
    return r;
  }

  CheckRecord disjointness_check() {
    DisjointnessReport d = check_disjointness_equivalence(m_);
    auto r = record("f-condition",
                    "each strictly positive element exceeds boundedly many mutually disjoint "
                    "elements (bound 64)",
                    d.f_condition, el());
    r.detail = std::string("homogeneous form ") + to_string(d.homogeneous_form.status) +
               ", family form " + to_string(d.gamma_form.status);
    if (!d.contract_holds)
      fail_suite("the three disjoint-family finiteness conditions disagree");
    return r;
  }

  CheckRecord rigid_implies_homogeneous() {
    Verdict v;
    std::size_t rigid = 0;
    for (ElemId x = 0; x < m_.size(); ++x) {
      if (x == m_.identity()) continue;
      ++v.checked;
      if (!is_rigid(m_, x).holds()) continue;
      ++rigid;
      if (is_homogeneous(m_, x).holds()) continue;
      auto c = v.checked;
      v = Verdict::fail({m_.element(x)}, "rigid but not homogeneous");
      v.checked = c;
      fail_suite("rigid element " + m_.render(x) + " is not homogeneous");
      break;
    }
    auto r = record("rigid-implies-homogeneous", "every rigid element is homogeneous", v, el());
    r.detail = std::to_string(rigid) + " rigid elements";
    return r;
  }

  CheckRecord quantum_implies_rigid() {
    Verdict v;
    std::size_t quanta = 0;
    for (ElemId x = 0; x < m_.size(); ++x) {
      if (x == m_.identity()) continue;
      ++v.checked;
      if (!is_prime_quantum(m_, m_.element(x), opts_.quantum_nmax).holds()) continue;
      ++quanta;
      if (is_rigid(m_, x).holds()) continue;
      auto c = v.checked;
      v = Verdict::fail({m_.element(x)}, "prime quantum but not rigid");
      v.checked = c;
      fail_suite("prime quantum " + m_.render(x) + " is not rigid");
      break;
    }
    auto r = record("prime-quantum-implies-rigid",
                    "every prime quantum (powers up to " + std::to_string(opts_.quantum_nmax) +
                        ") is rigid",
                    v, el());
    r.detail = std::to_string(quanta) + " prime quanta";
    return r;
  }

  void sum_bound_checks() {
    if (!cancellative().holds() || !divisibility().holds()) return;
    const auto *pr = out_.find("pre-riesz");
    if (!pr || pr->status != Status::Holds) {
      if (!check_pre_riesz(m_, 2).holds()) return;
    }
    auto t0 = std::chrono::steady_clock::now();
    Verdict minimal, least;
    for (ElemId a : m_.positive_ids())
      for (ElemId b : m_.positive_ids()) {
        if (b < a) continue;
        if (!m_.sum(a, b)) {
          ++minimal.unchecked;
          ++least.unchecked;
          continue;
        }
        SumBoundReport s = sum_upper_bound_unchecked(m_, a, b);
        ++minimal.checked;
        ++least.checked;
        if (!s.minimal_reading_holds && minimal.holds()) {
          auto c = minimal.checked;
          minimal = Verdict::fail({m_.element(a), m_.element(b)},
                                  "glb = 0 does not match a + b being a minimal upper bound");
          minimal.checked = c;
        }
        if (!s.least_reading_holds && least.holds()) {
          auto c = least.checked;
          least = Verdict::fail({m_.element(a), m_.element(b)},
                                s.glb_zero ? "glb = 0 but a + b is not the least upper bound"
                                           : "a + b is the least upper bound but glb != 0");
          least.checked = c;
        }
      }
    double ms = opts_.timings ? elapsed(t0) : 0;
    auto r1 = record("sum-bound-minimal",
                     "glb(a, b) = 0 iff a + b is a minimal upper bound of {a, b}", minimal, el());
    auto r2 = record("sum-bound-least",
                     "glb(a, b) = 0 iff a + b is the least upper bound of {a, b}", least, el());
    r1.elapsed_ms = r2.elapsed_ms = ms;
    if (minimal.fails()) fail_suite("glb = 0 does not characterise minimal upper bound a + b");
    out_.checks.push_back(std::move(r1));
    out_.checks.push_back(std::move(r2));
  }

  CheckRecord group_check(bool all_primal) {
    const char *anchor =
        "p, q <= r, s in the group of differences implies some z with p, q <= z <= r, s";
    std::optional<GroupContext> g;
    try {
      g.emplace(m_);
    } catch (const HypothesisUnmet &e) {
      return inconclusive("group-interpolation", anchor, e.what());
    }
    GroupSweepReport rep = sweep_group_interpolation(*g, opts_.group_base);
    auto r = record("group-interpolation", anchor, rep.verdict, el());
    std::ostringstream os;
    os << rep.quadruples << " quadruples over the first " << opts_.group_base
       << " elements; split " << rep.split_path << ", cone search " << rep.cone_path
       << ", none " << rep.no_interpolant;
    r.detail = os.str();
    if (!rep.modes_agree) fail_suite("group interpolation paths disagree with exhaustive search");
    if (rep.derivation_failures)
      fail_suite("group interpolation derivation equations failed to re-verify");
    if (all_primal && rep.verdict.fails())
      fail_suite("all elements primal but the group of differences lacks interpolation");
    return r;
  }
};

} // namespace

const char *to_string(Suite s) {
  switch (s) {
  case Suite::Order: return "order";
  case Suite::Riesz: return "riesz";
  case Suite::Ideal: return "ideal";
  case Suite::All: return "all";
  }
  return "?";
}

Suite suite_from_string(const std::string &s) {
  if (s == "order") return Suite::Order;
  if (s == "riesz") return Suite::Riesz;
  if (s == "ideal") return Suite::Ideal;
  if (s == "all") return Suite::All;
  throw SchemaError("unknown suite '" + s + "'");
}

const CheckRecord *AnalysisReport::find(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AnalysisReport analyze(const Instance &inst, Suite suite, const AnalysisOptions &opts) {
  AnalysisReport out;
  out.instance_id = inst.id;
  out.window = window_description(inst);
  Runner run(inst, opts, out);
  if (suite == Suite::Ideal && !inst.ring)
    throw SchemaError("the ideal suite needs a monoid of t-ideals (fim:<d>)");
  if (suite == Suite::Order || suite == Suite::All) run.order_suite();
  if (suite == Suite::Riesz || suite == Suite::All) run.riesz_suite();
  if (suite == Suite::Ideal || (suite == Suite::All && inst.ring)) run.ideal_suite();
  return out;
}

json report_to_json(const AnalysisReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back({{"name", c.name},
                      {"anchor", c.anchor},
                      {"verdict",
                       {{"status", to_string(c.status)},
                        {"witness", c.witness},
                        {"reason", c.reason},
                        {"checked", c.checked},
                        {"unchecked", c.unchecked}}},
                      {"detail", c.detail},
                      {"elapsed_ms", c.elapsed_ms}});
  return {{"instance_id", r.instance_id},
          {"window", r.window},
          {"checks", std::move(checks)},
          {"suite_failures", r.suite_failures}};
}

AnalysisReport report_from_json(const json &doc) {
  try {
    AnalysisReport r;
    r.instance_id = doc.at("instance_id").get<std::string>();
    r.window = doc.at("window").get<std::string>();
    r.suite_failures = doc.at("suite_failures").get<std::vector<std::string>>();
    for (const auto &c : doc.at("checks")) {
      CheckRecord k;
      k.name = c.at("name").get<std::string>();
      k.anchor = c.at("anchor").get<std::string>();
      const auto &v = c.at("verdict");
      k.status = status_from_string(v.at("status").get<std::string>());
      k.witness = v.at("witness").get<std::vector<std::string>>();
      k.reason = v.at("reason").get<std::string>();
      k.checked = v.at("checked").get<std::size_t>();
      k.unchecked = v.at("unchecked").get<std::size_t>();
      k.detail = c.at("detail").get<std::string>();
      k.elapsed_ms = c.at("elapsed_ms").get<double>();
      r.checks.push_back(std::move(k));
    }
    return r;
  } catch (const json::exception &e) {
    throw SchemaError(std::string("analysis report: ") + e.what());
  }
}

std::vector<std::string> unverified_witnesses(const Instance &inst, const AnalysisReport &r,
                                              Suite suite, const AnalysisOptions &opts) {
  const Monoid &m = inst.monoid;
  std::optional<AnalysisReport> rerun;
  std::vector<std::string> bad;
  for (const auto &c : r.checks) {
    if (c.status != Status::FailsWith) continue;
    bool ok = false;
    try {
      std::vector<ElemId> w;
      auto parse_all = [&] {
        for (const auto &s : c.witness) w.push_back(m.id_of(m.parse_element(s)));
      };
      if (c.name == "all-primal" && c.witness.size() == 1) {
        parse_all();
        ok = is_primal(m, w[0]).fails();
      } else if (c.name == "interpolation-22" && c.witness.size() == 4) {
        parse_all();
        const ElemId a = w[0], b = w[1], x = w[2], y = w[3];
        ok = m.leq(a, x) && m.leq(a, y) && m.leq(b, x) && m.leq(b, y);
        for (ElemId z = 0; ok && z < m.size(); ++z)
          if (m.leq(a, z) && m.leq(b, z) && m.leq(z, x) && m.leq(z, y)) ok = false;
      } else if (c.name == "cancellative" && c.witness.size() == 3) {
        parse_all();
        ok = w[1] != w[2] && m.sum(w[0], w[1]) && m.sum(w[0], w[1]) == m.sum(w[0], w[2]);
      } else if (c.name == "conic" && c.witness.size() == 2) {
        parse_all();
        ok = w[0] != m.identity() && m.sum(w[0], w[1]) == m.identity();
      } else {
        if (!rerun) rerun = analyze(inst, suite, opts);
        const CheckRecord *again = rerun->find(c.name);
        ok = again && again->status == c.status && again->witness == c.witness;
      }
    } catch (const error &) {
      ok = false;
    }
    if (!ok) bad.push_back(c.name);
  }
  return bad;
}

int exit_code(const AnalysisReport &r, const std::vector<std::string> &expected_failures) {
  if (!r.suite_failures.empty()) return 2;
  for (const auto &c : r.checks)
    if (c.status == Status::FailsWith &&
        std::find(expected_failures.begin(), expected_failures.end(), c.name) ==
            expected_failures.end())
      return 1;
  return 0;
}

std::string render_text(const AnalysisReport &r) {
  std::ostringstream os;
  os << r.instance_id << " (" << r.window << ")\n";
  std::size_t width = 0;
  for (const auto &c : r.checks) width = std::max(width, c.name.size());
  for (const auto &c : r.checks) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << to_string(c.status);
    if (!c.witness.empty()) os << " [" << join(c.witness) << "]";
    os << "  checked=" << c.checked;
    if (c.unchecked) os << " unchecked=" << c.unchecked;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
    if (c.status != Status::Holds && !c.reason.empty()) os << "      " << c.reason << '\n';
  }
  for (const auto &f : r.suite_failures) os << "  SUITE FAILURE: " << f << '\n';
  return os.str();
}

} // namespace ordalg
