#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "common.hpp"

using namespace dx;
using dxtest::S;
using dxtest::silt;
using dxtest::sub;
using dxtest::window;

namespace {

bool subset_of(const Subcat& a, const Subcat& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST_CASE("torsion class of a silting object") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  CHECK(torsion_of_silting(w, regular(w, 0)) == w.all());
  CHECK(torsion_of_silting(w, regular(w, 2)).empty());
  CHECK(torsion_of_silting(w, silt(t, "P2@2,I1@1")) == sub(t, "I1@1"));
  CHECK(torsion_of_silting(w, silt(t, "P2,P1@1")) == sub(t, "P2,P2@1,P1@1,I1@1"));
}

TEST_CASE("phi1 and phi2") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  auto all = enumerate_silting_exhaustive(w);
  auto x = phi1(w, w.all(), all);
  REQUIRE(x);
  CHECK(Subcat(x->begin(), x->end()) == sub(t, "P2,I1"));
  x = phi1(w, {}, all);
  REQUIRE(x);
  CHECK(Subcat(x->begin(), x->end()) == sub(t, "P2@2,I1@2"));
  x = phi1(w, sub(t, "I1@1"), all);
  REQUIRE(x);
  CHECK(Subcat(x->begin(), x->end()) == sub(t, "P1@2,I1@1"));
  CHECK_FALSE(phi1(w, sub(t, "P2"), all).has_value());
  // phi2 on the perp of each torsion class gives the same SMC
  for (const auto& p : all) {
    const Subcat tor = torsion_of_silting(w, p);
    auto a = phi1(w, tor, all), b = phi2(w, perp_right(w, tor), all);
    REQUIRE(a);
    REQUIRE(b);
    CHECK(*a == *b);
  }
}

TEST_CASE("phi1 agrees with the heart simples") {
  for (auto [f, d] : std::vector<std::pair<const char*, int>>{{"a2.qv", 2}, {"a3.qv", 2}}) {
    Window w = window(f, d);
    auto all = enumerate_silting_exhaustive(w);
    for (const auto& p : all) {
      const Subcat tor = torsion_of_silting(w, p);
      auto x = phi1(w, tor, all);
      REQUIRE(x);
      CHECK(Subcat(x->begin(), x->end()) == heart_simples(w, tor));
    }
  }
}

TEST_CASE("ledger sizes and closure") {
  for (auto [f, d, n] : std::vector<std::tuple<const char*, int, std::size_t>>{
           {"a2.qv", 1, 5}, {"a2.qv", 2, 12}, {"a3.qv", 1, 14}, {"a2.qv", 3, 22}}) {
    Window w = window(f, d);
    Ledger l = build_ledger(w, w.t().quiver.name);
    CHECK(l.rows.size() == n);
    CHECK(l.semibricks.size() == n);
    for (const auto& c : l.checks) CHECK_MESSAGE(c.status != "fail", c.check << " " << c.subject << ": " << c.witness);
    CHECK(l.ok());
    std::set<Subcat> tors, left, wide;
    for (const auto& r : l.rows) {
      tors.insert(r.torsion);
      left.insert(r.left);
      wide.insert(r.wide);
    }
    CHECK(tors.size() == n);
    CHECK(left.size() == n);
    CHECK(wide.size() == n);
  }
}

TEST_CASE("roundtrips on every ledger row") {
  Window w = window("a2.qv", 2);
  Ledger l = build_ledger(w, "A2");
  for (const auto& r : l.rows) {
    // T o Pi1 o Phi1 = id, and the dual
    CHECK(smallest_positive_torsion(w, r.left) == r.torsion);
    CHECK(smallest_positive_torsionfree(w, r.right) == r.torsionfree);
    CHECK(perp_right(w, r.torsion) == r.torsionfree);
    CHECK(perp_left(w, r.torsionfree) == r.torsion);
    CHECK(extension_closure(w, r.left) == r.wide);
    CHECK(wide_simples(w, r.torsion, r.wide) == r.left);
  }
}

TEST_CASE("order: inclusion of torsion classes is the silting order") {
  Window w = window("a3.qv", 2);
  Ledger l = build_ledger(w, "A3");
  for (const auto& a : l.rows)
    for (const auto& b : l.rows) CHECK(silting_leq(w, a.silting, b.silting) == subset_of(a.torsion, b.torsion));
}

TEST_CASE("no-middle instances") {
  Window w = window("a2.qv", 2);
  Ledger l = build_ledger(w, "A2");
  for (const auto& a : l.rows)
    for (const auto& b : l.rows) {
      if (!subset_of(b.torsion, a.torsion)) continue;
      Subcat meet;
      const Subcat fp = perp_right(w, b.torsion);
      for (const auto& z : a.torsion)
        if (fp.count(z)) meet.insert(z);
      if (meet.empty()) CHECK(a.torsion == b.torsion);
    }
}

TEST_CASE("digraph isomorphism") {
  CHECK(digraph_isomorphic(3, {{0, 1}, {1, 2}}, {{2, 0}, {1, 2}}));
  CHECK_FALSE(digraph_isomorphic(3, {{0, 1}, {1, 2}}, {{0, 1}, {0, 2}}));
  CHECK_FALSE(digraph_isomorphic(3, {{0, 1}, {1, 2}}, {{1, 0}, {1, 2}}));
  CHECK(digraph_isomorphic(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {{3, 2}, {3, 1}, {2, 0}, {1, 0}}));
}

TEST_CASE("the A2, d = 2 poset is the figure") {
  Window w = window("a2.qv", 2);
  Ledger l = build_ledger(w, "A2");
  REQUIRE(l.rows.size() == 12);
  CHECK(figure_a2_edges().size() == 16);
  CHECK(l.hasse.size() == 16);
  // figure arrows point upward; ledger covers are (upper, lower)
  std::vector<std::pair<int, int>> fig;
  for (auto [a, b] : figure_a2_edges()) fig.push_back({b - 1, a - 1});
  CHECK(digraph_isomorphic(12, l.hasse, fig));
}

TEST_CASE("JSON and DOT exports") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  Ledger l = build_ledger(w, "A2");
  nlohmann::json j = ledger_json(t, l);
  CHECK(j["algebra"] == "A2");
  CHECK(j["d"] == 2);
  REQUIRE(j["rows"].size() == 12);
  for (const char* k : {"silting", "smc", "semibrick_left", "semibrick_right", "torsion", "torsionfree", "wide"})
    CHECK(j["rows"][0].contains(k));
  CHECK(j["checks"].size() == l.checks.size());
  const std::string dot = ledger_dot(t, l);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t p = 0; (p = dot.find("[label=", p)) != std::string::npos; ++p) ++nodes;
  for (std::size_t p = 0; (p = dot.find(" -> ", p)) != std::string::npos; ++p) ++edges;
  CHECK(nodes == 12);
  CHECK(edges == 16);
  CHECK(ledger_json(t, build_ledger(w, "A2")).dump() == j.dump());
}

TEST_CASE("W'' agrees with the extension closure on A2, d = 2") {
  Window w = window("a2.qv", 2);
  for (const auto& sb : enumerate_semibricks(w)) {
    const Subcat s(sb.begin(), sb.end());
    WppResult r = w_doubleprime_oracle(w, smallest_positive_torsion(w, s), 4);
    CHECK(r.conclusive);
    CHECK(r.members == extension_closure(w, s));
  }
}

TEST_CASE("verification suites") {
  Window w = window("a2.qv", 2);
  CHECK(suite_names().size() == 11);
  auto res = run_suites(w, "A2", "all");
  CHECK(res.size() == suite_names().size());
  for (const auto& r : res) {
    CHECK_MESSAGE(r.ok(), r.suite);
    CHECK_FALSE(r.checks.empty());
  }
  CHECK_THROWS_AS(run_suites(w, "A2", "nope"), std::invalid_argument);
  nlohmann::json rep = report_json(w, "A2", res);
  CHECK(rep["status"] == "pass");
  const auto& c0 = rep["suites"][0]["checks"][0];
  for (const char* k : {"check", "algebra", "d", "subject", "status", "witness"}) CHECK(c0.contains(k));
}

TEST_CASE("verification suites on other algebras") {
  for (auto [f, d] : std::vector<std::pair<const char*, int>>{{"a2.qv", 1}, {"a3.qv", 1}, {"a3_alt.qv", 2}}) {
    Window w = window(f, d);
    for (const auto& r : run_suites(w, w.t().quiver.name, "all")) CHECK_MESSAGE(r.ok(), f << " d=" << d << " " << r.suite);
  }
}
