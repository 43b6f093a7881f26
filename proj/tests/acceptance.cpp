// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "dx/corresp.hpp"
#include "dx/verify.hpp"

using namespace dx;

namespace {

Window load(const std::string& file, int d) {
  return Window{knit_indecomposables(load_quiver(std::string(DX_DATA_DIR) + "/" + file)), d, 1, 4};
}

const std::vector<std::pair<std::string, int>> kTestSet = {{"a2.qv", 1}, {"a2.qv", 2}, {"a2.qv", 3},
                                                           {"a3.qv", 1}, {"a3.qv", 2}};

// Runs the named suites on every (algebra, d) and reports the first failure.
bool suites_pass(const std::vector<std::pair<std::string, int>>& cases, const std::vector<std::string>& suites,
                 std::string& detail) {
  std::size_t checks = 0;
  for (const auto& [f, d] : cases) {
    Window w = load(f, d);
    for (const auto& s : suites)
      for (const auto& r : run_suites(w, w.t().quiver.name, s))
        for (const auto& c : r.checks) {
          ++checks;
          if (c.status != "pass") {
            detail = w.t().quiver.name + " d=" + std::to_string(d) + " " + r.suite + "/" + c.check + " " + c.subject +
                     ": " + c.status + " " + c.witness;
            return false;
          }
        }
  }
  detail = std::to_string(checks) + " checks";
  return true;
}

bool crit1(std::string& detail) {
  Window w = load("a2.qv", 2);
  std::vector<std::string> names;
  for (const auto& s : w.objects()) names.push_back(summand_name(w.t(), s));
  std::ostringstream o;
  for (const auto& n : names) o << n << " ";
  detail = o.str();
  return names == std::vector<std::string>{"P2", "P1", "I1", "P2@1", "P1@1", "I1@1"};
}

// Column sizes of the ledger for one (algebra, d), each computed on its own route.
struct Columns {
  std::size_t silting, by_mutation, smc, semibricks, torsion, wide;
  bool ledger_ok;
};

Columns columns(const Window& w) {
  Columns c{};
  auto all = enumerate_silting_exhaustive(w);
  auto bfs = enumerate_by_mutation(w);
  c.silting = all.size();
  c.by_mutation = std::set<SiltObj>(bfs.begin(), bfs.end()) == std::set<SiltObj>(all.begin(), all.end()) ? bfs.size() : 0;
  std::set<std::set<Summand>> smcs;
  for (const auto& x : enumerate_smc_bruteforce(w)) smcs.insert({x.begin(), x.end()});
  c.smc = smcs.size();
  auto sbs = enumerate_semibricks(w);
  c.semibricks = sbs.size();
  std::size_t pos = 0;
  for (const auto& t : all_torsion_classes(w)) pos += is_positive_torsion_class(w, t).ok;
  c.torsion = pos;
  std::set<Subcat> wides;
  for (const auto& s : sbs) wides.insert(extension_closure(w, Subcat(s.begin(), s.end())));
  c.wide = wides.size();
  c.ledger_ok = build_ledger(w, w.t().quiver.name).ok();
  return c;
}

std::string col_str(const Columns& c) {
  std::ostringstream o;
  o << "silting " << c.silting << ", bfs " << c.by_mutation << ", smc " << c.smc << ", semibricks " << c.semibricks
    << ", positive torsion " << c.torsion << ", wide " << c.wide;
  return o.str();
}

bool all_equal(const Columns& c, std::size_t n) {
  return c.silting == n && c.by_mutation == n && c.smc == n && c.semibricks == n && c.torsion == n && c.wide == n;
}

bool crit2(std::string& detail) {
  Window w = load("a2.qv", 2);
  Columns c = columns(w);
  Ledger l = build_ledger(w, "A2");
  std::vector<std::pair<int, int>> fig;
  for (auto [a, b] : figure_a2_edges()) fig.push_back({b - 1, a - 1});
  const bool iso = l.rows.size() == 12 && l.hasse.size() == fig.size() && digraph_isomorphic(12, l.hasse, fig);
  detail = col_str(c) + "; " + std::to_string(l.hasse.size()) + " covers, figure " + (iso ? "isomorphic" : "NOT isomorphic");
  return all_equal(c, 12) && iso && c.ledger_ok;
}

bool crit3(std::string& detail) {
  Columns a = columns(load("a2.qv", 1)), b = columns(load("a3.qv", 1));
  detail = "A2: " + col_str(a) + "; A3: " + col_str(b);
  return all_equal(a, 5) && all_equal(b, 14) && a.ledger_ok && b.ledger_ok;
}

bool crit4(std::string& detail) {
  if (!suites_pass(kTestSet, {"q-criterion"}, detail)) return false;
  Window w = load("a2.qv", 2);
  const IndTable& t = w.t();
  SiltObj p = parse_wobj(t, "P2@2,I1@1").s;
  std::sort(p.begin(), p.end());
  QSequence qs = q_sequence(w, p);
  const bool ok = qs.q.size() == 3 && qs.q[0].empty() && qs.q[1] == parse_wobj(t, "I1@1") && qs.q[2] == parse_wobj(t, "P2@2^2");
  detail += "; Q-sequence of {P2@2, I1@1}: " + wobj_str(t, qs.q[0]) + " | " + wobj_str(t, qs.q[1]) + " | " + wobj_str(t, qs.q[2]);
  return ok;
}

bool crit8(std::string& detail) {
  std::vector<std::pair<std::string, int>> cases = kTestSet;
  cases.push_back({"a3_alt.qv", 2});
  cases.push_back({"d4.qv", 1});
  return suites_pass(cases, {"phi"}, detail);
}

bool crit9(std::string& detail) {
  Window w = load("a2.qv", 2);
  const IndTable& t = w.t();
  if (!suites_pass({{"a2.qv", 2}}, {"main2"}, detail)) return false;
  std::size_t agree = 0;
  bool ok = true;
  for (const auto& s : enumerate_semibricks(w)) {
    const Subcat ss(s.begin(), s.end());
    WppResult r = w_doubleprime_oracle(w, smallest_positive_torsion(w, ss), w.budget);
    if (r.conclusive && r.members == extension_closure(w, ss))
      ++agree;
    else
      ok = false;
  }
  const Subcat s = {{t.find("P2"), 0}, {t.find("I1"), 1}};
  const bool semisimple = extension_closure(w, s) == s;
  const int ext2 = hom_dim(t, Summand{t.find("I1"), 1}, Summand{t.find("P2"), 0}, 2);
  detail += "; W'' = Filt on " + std::to_string(agree) + "/12 semibricks; W({P2, I1@1}) = add S: " +
            (semisimple ? "yes" : "no") + "; dim Hom(I1@1, P2[2]) = " + std::to_string(ext2);
  return ok && agree == 12 && semisimple && ext2 == 1;
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Item> items = {
      {1, "A2 d=2 window census", crit1},
      {2, "A2 d=2 counts and poset", crit2},
      {3, "d=1 counts (A2, A3)", crit3},
      {4, "mutation criterion via Q-sequences", crit4},
      {5, "cohomology multiplicities of SMCs",
       [](std::string& d) { return suites_pass(kTestSet, {"cohom-mult"}, d); }},
      {6, "roundtrips and mutation commutation",
       [](std::string& d) { return suites_pass(kTestSet, {"roundtrips", "commutation"}, d); }},
      {7, "property suites (trunc-cone, positive, Euler, perp-fac)",
       [](std::string& d) { return suites_pass(kTestSet, {"trunc-cone", "positive-equivalences", "euler", "perp-fac"}, d); }},
      {8, "phi closure reaches T(S)", crit8},
      {9, "W'' equals the wide subcategory", crit9},
      {10, "End-algebra realization of wide subcategories",
       [](std::string& d) { return suites_pass({{"a2.qv", 2}}, {"realization"}, d); }},
  };
  int failed = 0;
  for (const auto& it : items) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = it.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60) {
      ok = false;
      detail += " (over the 60 s budget)";
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << it.id << " " << it.name << " [" << std::fixed
              << std::setprecision(1) << secs << " s] " << detail << std::endl;
  }
  return failed ? 1 : 0;
}
