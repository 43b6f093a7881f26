#include "dx/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "dx/quiver.hpp"

namespace dx {

namespace {

WObj obj(const Summand& s) { return WObj::one(s.ind, s.shift); }

bool subset(const Subcat& a, const Subcat& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

struct Ctx {
  const Window& w;
  const IndTable& t;
  std::string algebra;
  std::vector<SiltObj> silting;
};

using Suite = std::function<void(Ctx&, SuiteResult&)>;

void add(SuiteResult& r, const std::string& check, const std::string& subject, bool ok, const std::string& witness = "") {
  r.checks.push_back({check, subject, ok ? "pass" : "fail", ok ? "" : witness});
}

// Morphisms between objects of add(list): every basis map between two
// indecomposables plus `random` maps between sums of two.
std::vector<WMor> sample_maps(const IndTable& t, const std::vector<Summand>& list, int random, std::mt19937_64& rng) {
  std::vector<WMor> out;
  for (const auto& a : list)
    for (const auto& b : list)
      for (auto& f : hom_basis_w(t, obj(a), obj(b))) out.push_back(std::move(f));
  for (const auto& a : list) {
    out.push_back(zero_mor(t, obj(a), WObj{}));
    out.push_back(zero_mor(t, WObj{}, obj(a)));
  }
  if (list.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
  std::uniform_int_distribution<int> len(1, 3);
  auto draw = [&] {
    WObj x;
    for (int k = len(rng); k > 0; --k) x = direct_sum(x, obj(list[pick(rng)]));
    return x;
  };
  for (int r = 0; r < random; ++r) {
    WObj x = draw(), y = draw();
    out.push_back(random_mor(t, x, y, rng));
  }
  return out;
}

bool trunc_cone_closed(const Window& w, const Subcat& t, int random, std::mt19937_64& rng, std::string& witness) {
  for (const auto& f : sample_maps(w.t(), to_list(t), random, rng)) {
    WObj c = trunc_ge(cone(w.t(), f), -w.d + 1);
    if (!all_in(c, t)) {
      witness = "truncated cone " + wobj_str(w.t(), c) + " of a map " + wobj_str(w.t(), f.src) + " -> " +
                wobj_str(w.t(), f.tgt);
      return false;
    }
  }
  return true;
}

bool trunc_cocone_closed(const Window& w, const Subcat& f, int random, std::mt19937_64& rng) {
  for (const auto& g : sample_maps(w.t(), to_list(f), random, rng))
    if (!all_in(trunc_le(cocone(w.t(), g), 0), f)) return false;
  return true;
}

void suite_trunc_cone(Ctx& c, SuiteResult& r) {
  std::mt19937_64 rng(c.w.seed);
  for (const auto& p : c.silting) {
    Subcat t = torsion_of_silting(c.w, p);
    std::string why;
    add(r, "trunc-cone", subcat_str(c.t, t), trunc_cone_closed(c.w, t, 100, rng, why), why);
  }
}

void suite_positive(Ctx& c, SuiteResult& r) {
  std::mt19937_64 rng(c.w.seed);
  int positive = 0;
  for (const auto& t : all_torsion_classes(c.w)) {
    const Subcat f = perp_right(c.w, t);
    std::string why;
    const bool c2 = trunc_cone_closed(c.w, t, 20, rng, why);
    const bool c3 = subset(fac_d(c.w, t), t) && extension_closure(c.w, t) == t;
    const bool c5 = trunc_cocone_closed(c.w, f, 20, rng);
    const bool c6 = subset(sub_d(c.w, f), f) && extension_closure(c.w, f) == f;
    bool c7 = true;
    for (const auto& x : t)
      for (const auto& y : f)
        if (hom_dim(c.t, x, y, -1)) c7 = false;
    const bool agree = c2 == c3 && c3 == c5 && c5 == c6 && c6 == c7;
    positive += c7;
    add(r, "positive-equivalences", subcat_str(c.t, t), agree,
        std::string("(2,3,5,6,7) = ") + char('0' + c2) + char('0' + c3) + char('0' + c5) + char('0' + c6) +
            char('0' + c7));
  }
  add(r, "positive-count", c.algebra, positive == static_cast<int>(c.silting.size()),
      std::to_string(positive) + " positive torsion classes, " + std::to_string(c.silting.size()) + " silting");
}

void suite_q_criterion(Ctx& c, SuiteResult& r) {
  for (const auto& p : c.silting) {
    const std::string subj = silt_str(c.t, p);
    QSequence qs = q_sequence(c.w, p);
    Verdict v = check_q_sequence(c.w, p, qs);
    add(r, "q-sequence", subj, v.ok, v.witness);
    for (int i = 0; i < static_cast<int>(p.size()); ++i) {
      bool any = false;
      for (Direction dir : {Direction::Left, Direction::Right}) {
        const bool direct = mutate(c.w, p, i, dir).ok;
        const bool crit = mutation_exists(p, qs, i, dir);
        any |= direct;
        add(r, "mutation-criterion", subj + " at " + summand_name(c.t, p[i]) + (dir == Direction::Left ? " left" : " right"),
            direct == crit, std::string("direct ") + (direct ? "exists" : "leaves window") + ", criterion says " + (crit ? "exists" : "not"));
      }
      add(r, "some-direction", subj + " at " + summand_name(c.t, p[i]), any, "neither mutation exists");
    }
  }
}

void suite_cohom(Ctx& c, SuiteResult& r) {
  for (const auto& p : c.silting) {
    const std::string subj = silt_str(c.t, p);
    SMC x = smc_of_silting(c.w, p);
    QSequence qs = q_sequence(c.w, p);
    Verdict a = cohom_multiplicity_check(c.w, p, x, qs);
    add(r, "cohom-multiplicity", subj, a.ok, a.witness);
    Verdict b = distinct_top_check(c.w, x, qs);
    add(r, "distinct-top", subj, b.ok, b.witness);
  }
}

void suite_roundtrips(Ctx& c, SuiteResult& r) {
  Ledger l = build_ledger(c.w, c.algebra);
  for (auto& ch : l.checks) r.checks.push_back(std::move(ch));
}

void suite_commutation(Ctx& c, SuiteResult& r) {
  for (const auto& p : c.silting) {
    const SMC x = smc_of_silting(c.w, p);
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      for (Direction dir : {Direction::Left, Direction::Right}) {
        const std::string subj =
            silt_str(c.t, p) + " at " + summand_name(c.t, p[i]) + (dir == Direction::Left ? " left" : " right");
        MutationResult m = mutate(c.w, p, i, dir);
        SmcMutation sm = smc_mutate(c.w, x, i, dir);
        add(r, "smc-mutation-exists", subj, m.ok == sm.ok && sm.ok == smc_mutation_exists(c.w, x, i, dir));
        if (!m.ok || !sm.ok) continue;
        SMC y = smc_of_silting(c.w, m.result);
        add(r, "smc-commutes", subj, Subcat(y.begin(), y.end()) == Subcat(sm.result.begin(), sm.result.end()),
            smc_str(c.t, y) + " vs " + smc_str(c.t, sm.result));
        // Mutating the new summand back in the other direction recovers P.
        const int j = static_cast<int>(std::find(m.result.begin(), m.result.end(), m.added) - m.result.begin());
        MutationResult back = mutate(c.w, m.result, j, dir == Direction::Left ? Direction::Right : Direction::Left);
        add(r, "mutation-inverse", subj, back.ok && back.result == p);
        const bool down = dir == Direction::Left;
        const bool strict = down ? silting_leq(c.w, m.result, p) && !silting_leq(c.w, p, m.result)
                                 : silting_leq(c.w, p, m.result) && !silting_leq(c.w, m.result, p);
        add(r, "mutation-order", subj, strict);
      }
  }
}

void suite_euler(Ctx& c, SuiteResult& r) {
  bool ok = true;
  std::string why;
  for (int a = 0; a < c.t.size(); ++a)
    for (int b = 0; b < c.t.size(); ++b)
      if (c.t.G[a][b] - c.t.E[a][b] != euler_form(c.t.quiver, c.t.inds[a].dims, c.t.inds[b].dims)) {
        ok = false;
        why = c.t.names[a] + ", " + c.t.names[b];
      }
  add(r, "euler-form", c.algebra, ok, why);
}

void suite_perp_fac(Ctx& c, SuiteResult& r) {
  for (const auto& s : enumerate_semibricks(c.w)) {
    const Subcat ss(s.begin(), s.end());
    const std::string subj = subcat_str(c.t, ss);
    const Subcat fd = fac_d(c.w, ss);
    add(r, "perp-le0-equals-perp-fac", subj, perp_le0_right(c.w, ss) == perp_right(c.w, fd),
        subcat_str(c.t, perp_le0_right(c.w, ss)) + " vs " + subcat_str(c.t, perp_right(c.w, fd)));
    const Subcat f1 = fac1(c.w, ss);
    const Subcat phi = phi_closure(c.w, ss).phi;
    const Subcat t = smallest_positive_torsion(c.w, ss);
    add(r, "closure-chain", subj, subset(ss, fd) && subset(fd, f1) && subset(fd, phi) && subset(phi, t));
  }
}

void suite_phi(Ctx& c, SuiteResult& r) {
  for (const auto& s : enumerate_semibricks(c.w)) {
    const Subcat ss(s.begin(), s.end());
    PhiResult p = phi_closure(c.w, ss);
    add(r, "phi-equals-T", subcat_str(c.t, ss), p.matches_t,
        "phi = " + subcat_str(c.t, p.phi) + ", T = " + subcat_str(c.t, smallest_positive_torsion(c.w, ss)));
  }
}

void suite_main2(Ctx& c, SuiteResult& r) {
  for (const auto& s : enumerate_semibricks(c.w)) {
    const Subcat ss(s.begin(), s.end());
    const Subcat t = smallest_positive_torsion(c.w, ss);
    const Subcat wide = extension_closure(c.w, ss);
    WppResult o = w_doubleprime_oracle(c.w, t, c.w.budget);
    Check ch{"wpp-equals-filt", c.algebra, "", ""};
    ch.subject = subcat_str(c.t, ss);
    if (o.members == wide) {
      ch.status = o.conclusive ? "pass" : "inconclusive";
    } else {
      ch.status = o.conclusive ? "fail" : "inconclusive";
      ch.witness = "W'' = " + subcat_str(c.t, o.members) + ", Filt = " + subcat_str(c.t, wide);
    }
    for (const auto& m : o.inconclusive) ch.witness += (ch.witness.empty() ? "" : "; ") + m;
    r.checks.push_back(ch);
    add(r, "w-prime-via-heart", ch.subject, w_prime(c.w, t) == w_prime_via_heart(c.w, t));
    add(r, "wide-simples", ch.subject, wide_simples(c.w, t, wide) == ss);
  }
}

void suite_realization(Ctx& c, SuiteResult& r) {
  for (const auto& p : c.silting) {
    WideCount wc = wide_modcat_check(c.w, p, smc_of_silting(c.w, p));
    add(r, "end-algebra-simples", silt_str(c.t, p), wc.ok(),
        std::to_string(wc.simples_f) + "/" + std::to_string(wc.pi1_size) + " and " + std::to_string(wc.simples_fdual) +
            "/" + std::to_string(wc.pi2_size));
  }
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r = {
      {"trunc-cone", suite_trunc_cone},   {"positive-equivalences", suite_positive},
      {"q-criterion", suite_q_criterion}, {"cohom-mult", suite_cohom},
      {"roundtrips", suite_roundtrips},   {"commutation", suite_commutation},
      {"euler", suite_euler},             {"perp-fac", suite_perp_fac},
      {"phi", suite_phi},                 {"main2", suite_main2},
      {"realization", suite_realization}};
  return r;
}

}  // namespace

bool SuiteResult::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<Subcat> all_torsion_classes(const Window& w) {
  auto close = [&](const Subcat& s) { return perp_left(w, perp_right(w, s)); };
  const auto objs = w.objects();
  std::set<Subcat> seen{close({})};
  std::deque<Subcat> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Subcat t = todo.front();
    todo.pop_front();
    for (const auto& z : objs) {
      if (t.count(z)) continue;
      Subcat u = t;
      u.insert(z);
      Subcat c = close(u);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SuiteResult> run_suites(const Window& w, const std::string& algebra, const std::string& suite) {
  const auto& reg = registry();
  if (suite != "all" && std::none_of(reg.begin(), reg.end(), [&](const auto& e) { return e.first == suite; }))
    throw std::invalid_argument("unknown suite '" + suite + "'");
  Ctx ctx{w, w.t(), algebra, enumerate_silting_exhaustive(w)};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : reg) {
    if (suite != "all" && suite != name) continue;
    SuiteResult r{name, {}};
    fn(ctx, r);
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json report_json(const Window& w, const std::string& algebra, const std::vector<SuiteResult>& res) {
  using nlohmann::json;
  json j;
  j["algebra"] = algebra;
  j["d"] = w.d;
  j["seed"] = w.seed;
  j["witness_budget"] = w.budget;
  j["suites"] = json::array();
  bool all_ok = true;
  for (const auto& r : res) {
    json s;
    s["suite"] = r.suite;
    s["status"] = r.ok() ? "pass" : "fail";
    all_ok &= r.ok();
    s["checks"] = json::array();
    for (const auto& c : r.checks)
      s["checks"].push_back({{"check", c.check},
                             {"algebra", algebra},
                             {"d", w.d},
                             {"subject", c.subject},
                             {"status", c.status},
                             {"witness", c.witness}});
    j["suites"].push_back(s);
  }
  j["status"] = all_ok ? "pass" : "fail";
  return j;
}

}  // namespace dx
