#include "dx/corresp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace dx {

namespace {

WObj obj(const Summand& s) { return WObj::one(s.ind, s.shift); }

Subcat as_set(const std::vector<Summand>& v) { return Subcat(v.begin(), v.end()); }

bool subset(const Subcat& a, const Subcat& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

Subcat torsion_of_silting(const Window& w, const SiltObj& p) {
  Subcat out;
  for (const auto& x : w.objects()) {
    bool ok = true;
    for (const auto& a : p)
      for (int k : {a.shift - x.shift, a.shift - x.shift + 1})
        if (k > 0 && hom_dim(w.t(), a, x, k)) ok = false;
    if (ok) out.insert(x);
  }
  return out;
}

std::optional<SMC> phi1(const Window& w, const Subcat& t, const std::vector<SiltObj>& silting) {
  for (const auto& p : silting)
    if (torsion_of_silting(w, p) == t) return smc_of_silting(w, p);
  return std::nullopt;
}

std::optional<SMC> phi2(const Window& w, const Subcat& f, const std::vector<SiltObj>& silting) {
  return phi1(w, perp_left(w, f), silting);
}

Subcat wide_simples(const Window& w, const Subcat& t, const Subcat& wide) {
  const IndTable& tb = w.t();
  const Subcat heart = heart_objects(w, t);
  Subcat out;
  for (const auto& x : wide) {
    bool simple = true;
    for (const auto& y : wide) {
      if (y == x || !simple) continue;
      for (const auto& f : hom_basis_w(tb, obj(y), obj(x)))
        if (all_in(cone(tb, f), heart)) {
          simple = false;
          break;
        }
    }
    if (simple) out.insert(x);
  }
  return out;
}

bool Ledger::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

Ledger build_ledger(const Window& w, const std::string& algebra) {
  const IndTable& tb = w.t();
  Ledger l;
  l.algebra = algebra;
  l.d = w.d;
  auto check = [&](const std::string& name, const std::string& subject, bool ok, const std::string& witness = "") {
    l.checks.push_back({name, subject, ok ? "pass" : "fail", ok ? "" : witness});
  };

  const auto silting = enumerate_silting_exhaustive(w);
  for (const auto& p : silting) {
    LedgerRow r;
    r.silting = p;
    r.smc = smc_of_silting(w, p);
    r.left = pi1(w, r.smc);
    r.right = pi2(w, r.smc);
    r.torsion = torsion_of_silting(w, p);
    r.torsionfree = perp_right(w, r.torsion);
    r.wide = extension_closure(w, r.left);
    l.rows.push_back(std::move(r));
  }
  l.semibricks = enumerate_semibricks(w);

  // Column cardinalities.
  std::set<Subcat> smcs, lefts, rights, tors, tfs, wides;
  for (const auto& r : l.rows) {
    smcs.insert(as_set(r.smc));
    lefts.insert(r.left);
    rights.insert(r.right);
    tors.insert(r.torsion);
    tfs.insert(r.torsionfree);
    wides.insert(r.wide);
  }
  const std::size_t n = l.rows.size();
  std::ostringstream sizes;
  sizes << "silting " << n << ", smc " << smcs.size() << ", semibrick " << l.semibricks.size() << ", left "
        << lefts.size() << ", right " << rights.size() << ", torsion " << tors.size() << ", torsionfree "
        << tfs.size() << ", wide " << wides.size();
  check("cardinality", algebra, smcs.size() == n && l.semibricks.size() == n && lefts.size() == n &&
                                    rights.size() == n && tors.size() == n && tfs.size() == n && wides.size() == n,
        sizes.str());
  const auto by_mutation = enumerate_by_mutation(w);
  check("mutation-connected", algebra, by_mutation == silting,
        std::to_string(by_mutation.size()) + " reached by mutation of " + std::to_string(n));

  for (const auto& r : l.rows) {
    const std::string subj = silt_str(tb, r.silting);
    check("smc-valid", subj, is_smc(w, r.smc), smc_str(tb, r.smc));
    auto pos = is_positive_torsion_class(w, r.torsion);
    check("torsion-positive", subj, pos.ok, pos.witness);
    Subcat sims;
    for (const auto& x : heart_simples(w, r.torsion)) sims.insert(x);
    check("phi1-heart-simples", subj, sims == as_set(r.smc), subcat_str(tb, sims) + " vs " + smc_str(tb, r.smc));
    check("roundtrip-T-pi1-phi1", subj, smallest_positive_torsion(w, r.left) == r.torsion,
          subcat_str(tb, smallest_positive_torsion(w, r.left)));
    check("roundtrip-F-pi2-phi2", subj, smallest_positive_torsionfree(w, r.right) == r.torsionfree,
          subcat_str(tb, smallest_positive_torsionfree(w, r.right)));
    check("perp-duality", subj, perp_left(w, r.torsionfree) == r.torsion, subcat_str(tb, perp_left(w, r.torsionfree)));
    check("pi-semibricks", subj, is_semibrick(w, to_list(r.left)) && is_semibrick(w, to_list(r.right)));
    Subcat uni = r.left;
    for (const auto& s : r.right) uni.insert({s.ind, s.shift + 1});
    check("smc-union", subj, uni == as_set(r.smc), subcat_str(tb, uni));
    Subcat ws = wide_simples(w, r.torsion, r.wide);
    check("wide-simples", subj, ws == r.left, subcat_str(tb, ws));
  }

  for (const auto& s : l.semibricks) {
    const Subcat ss = as_set(s);
    const std::string subj = subcat_str(tb, ss);
    const Subcat t = smallest_positive_torsion(w, ss);
    auto x = phi1(w, t, silting);
    check("left-finite", subj, x.has_value(), "T(S) = " + subcat_str(tb, t) + " is not a ledger torsion class");
    if (x) check("roundtrip-pi1-phi1-T", subj, pi1(w, *x) == ss, subcat_str(tb, pi1(w, *x)));
    const Subcat f = smallest_positive_torsionfree(w, ss);
    auto y = phi2(w, f, silting);
    check("right-finite", subj, y.has_value(), "F(S) = " + subcat_str(tb, f) + " is not a ledger torsion-free class");
    if (y) check("roundtrip-pi2-phi2-F", subj, pi2(w, *y) == ss, subcat_str(tb, pi2(w, *y)));
    Subcat sim;
    for (const auto& z : heart_simples(w, t))
      if (z.shift <= w.d - 1) sim.insert(z);
    check("sim-in-heart", subj, sim == ss, subcat_str(tb, sim));
  }

  // Orders and covers.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool a = silting_leq(w, l.rows[i].silting, l.rows[j].silting);
      const bool b = subset(l.rows[i].torsion, l.rows[j].torsion);
      if (a != b) check("order", silt_str(tb, l.rows[i].silting) + " vs " + silt_str(tb, l.rows[j].silting), false,
                        "silting order and torsion inclusion disagree");
      // No torsion class strictly between T' and T when T meets T'^perp trivially.
      if (i != j && b) {
        Subcat meet;
        const Subcat perp = perp_right(w, l.rows[i].torsion);
        for (const auto& z : l.rows[j].torsion)
          if (perp.count(z)) meet.insert(z);
        if (meet.empty() && l.rows[i].torsion != l.rows[j].torsion)
          check("no-middle", silt_str(tb, l.rows[j].silting), false, "T meets T'^perp trivially but T != T'");
      }
    }
  check("order", algebra, true);
  check("no-middle", algebra, true);

  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t up = 0; up < n; ++up) {
      if (lo == up || !subset(l.rows[lo].torsion, l.rows[up].torsion)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (k != lo && k != up && subset(l.rows[lo].torsion, l.rows[k].torsion) &&
            subset(l.rows[k].torsion, l.rows[up].torsion))
          cover = false;
      if (cover) l.hasse.emplace_back(static_cast<int>(up), static_cast<int>(lo));
    }
  std::sort(l.hasse.begin(), l.hasse.end());
  std::set<std::pair<int, int>> mut;
  for (const auto& e : mutation_edges(w, silting)) mut.insert({e.upper, e.lower});
  check("hasse-equals-mutation", algebra, mut == std::set<std::pair<int, int>>(l.hasse.begin(), l.hasse.end()),
        std::to_string(l.hasse.size()) + " covers, " + std::to_string(mut.size()) + " mutation edges");
  return l;
}

bool digraph_isomorphic(int n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<char>> ma(n, std::vector<char>(n, 0)), mb = ma;
  std::vector<int> ina(n, 0), outa(n, 0), inb(n, 0), outb(n, 0);
  for (auto [u, v] : a) ma[u][v] = 1, ++outa[u], ++ina[v];
  for (auto [u, v] : b) mb[u][v] = 1, ++outb[u], ++inb[v];
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> rec = [&](int u) {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || ina[u] != inb[v] || outa[u] != outb[v]) continue;
      bool ok = true;
      for (int x = 0; x < u && ok; ++x) ok = ma[u][x] == mb[v][map[x]] && ma[x][u] == mb[map[x]][v];
      if (!ok) continue;
      map[u] = v;
      used[v] = 1;
      if (rec(u + 1)) return true;
      used[v] = 0;
    }
    map[u] = -1;
    return false;
  };
  return rec(0);
}

const std::vector<std::pair<int, int>>& figure_a2_edges() {
  static const std::vector<std::pair<int, int>> e = {{1, 2}, {1, 3}, {2, 4},  {3, 6},  {3, 5},  {5, 10},
                                                     {6, 9}, {5, 7}, {7, 9},  {10, 11}, {9, 11}, {2, 7},
                                                     {7, 8}, {4, 8}, {11, 12}, {8, 12}};
  return e;
}

nlohmann::json ledger_json(const IndTable& t, const Ledger& l) {
  using nlohmann::json;
  auto names = [&](const auto& c) {
    json a = json::array();
    for (const auto& s : c) a.push_back(summand_name(t, s));
    return a;
  };
  json j;
  j["algebra"] = l.algebra;
  j["d"] = l.d;
  j["rows"] = json::array();
  for (const auto& r : l.rows)
    j["rows"].push_back({{"silting", names(r.silting)},
                         {"smc", names(r.smc)},
                         {"semibrick_left", names(r.left)},
                         {"semibrick_right", names(r.right)},
                         {"torsion", names(r.torsion)},
                         {"torsionfree", names(r.torsionfree)},
                         {"wide", names(r.wide)}});
  j["hasse_edges"] = json::array();
  for (auto [u, v] : l.hasse) j["hasse_edges"].push_back({u, v});
  j["checks"] = json::array();
  for (const auto& c : l.checks)
    j["checks"].push_back({{"check", c.check}, {"subject", c.subject}, {"status", c.status}, {"witness", c.witness}});
  return j;
}

std::string ledger_dot(const IndTable& t, const Ledger& l) {
  std::ostringstream o;
  o << "digraph torsion_poset {\n  rankdir=TB;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < l.rows.size(); ++i) {
    const auto& r = l.rows[i];
    o << "  n" << i << " [label=\"T = " << subcat_str(t, r.torsion) << "\\nsemibrick " << subcat_str(t, r.left)
      << "\\nsilting " << silt_str(t, r.silting) << "\\nsmc " << smc_str(t, r.smc) << "\"];\n";
  }
  for (auto [u, v] : l.hasse) o << "  n" << u << " -> n" << v << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace dx
