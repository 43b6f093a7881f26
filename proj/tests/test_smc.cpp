#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "common.hpp"

using namespace dx;
using dxtest::S;
using dxtest::silt;
using dxtest::sub;
using dxtest::window;

namespace {

const std::vector<std::pair<const char*, int>> kCases = {{"a2.qv", 1}, {"a2.qv", 2}, {"a2.qv", 3},
                                                         {"a3.qv", 1}, {"a3.qv", 2}, {"a3_alt.qv", 2}};

SMC simples_at(const Window& w, int shift) {
  const IndTable& t = w.t();
  SMC x;
  for (int a = 0; a < t.size(); ++a)
    if (t.simple_vertex[a] >= 0) x.push_back({a, shift});
  return x;
}

std::set<Summand> as_set(const SMC& x) { return {x.begin(), x.end()}; }

}  // namespace

TEST_CASE("SMC of a silting object") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  CHECK(as_set(smc_of_silting(w, regular(w, 0))) == as_set(simples_at(w, 0)));
  CHECK(as_set(smc_of_silting(w, regular(w, 2))) == as_set(simples_at(w, 2)));
  CHECK(as_set(smc_of_silting(w, silt(t, "P2@2,I1@1"))) == sub(t, "P1@2,I1@1"));
  CHECK(as_set(smc_of_silting(w, silt(t, "P1,I1"))) == sub(t, "P1,P2@1"));
  CHECK(as_set(smc_of_silting(w, silt(t, "P2,P1@1"))) == sub(t, "P2,I1@1"));
}

TEST_CASE("pairing with the silting summands") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    const IndTable& t = w.t();
    for (const auto& p : enumerate_silting_exhaustive(w)) {
      SMC x = smc_of_silting(w, p);
      REQUIRE(x.size() == p.size());
      CHECK(is_smc(w, x));
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
          for (int m = -d - 1; m <= d + 1; ++m)
            CHECK(hom_dim(t, p[i], x[j], m) == (i == j && m == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("is_smc examples") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  CHECK(is_smc(w, simples_at(w, 0)));
  CHECK(is_smc(w, {S(t, "P2"), S(t, "I1", 1)}));
  CHECK_FALSE(is_smc(w, {S(t, "P2"), S(t, "P2", 1)}));
  CHECK_FALSE(is_smc(w, {S(t, "P2"), S(t, "P1")}));
}

TEST_CASE("SMC mutation") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  SMC x = {S(t, "I1"), S(t, "P2")};
  SmcMutation m = smc_mutate(w, x, 1, Direction::Left);
  REQUIRE(m.ok);
  CHECK(as_set(m.result) == sub(t, "P1,P2@1"));
  SmcMutation back = smc_mutate(w, m.result, 1, Direction::Right);
  REQUIRE(back.ok);
  CHECK(back.result == x);
}

TEST_CASE("SMC mutation commutes with silting mutation and inverts") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    for (const auto& p : enumerate_silting_exhaustive(w)) {
      SMC x = smc_of_silting(w, p);
      for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (Direction dir : {Direction::Left, Direction::Right}) {
          MutationResult mp = mutate(w, p, i, dir);
          SmcMutation mx = smc_mutate(w, x, i, dir);
          CHECK(mp.ok == mx.ok);
          CHECK(mx.ok == smc_mutation_exists(w, x, i, dir));
          if (!mp.ok || !mx.ok) continue;
          CHECK(as_set(smc_of_silting(w, mp.result)) == as_set(mx.result));
          SmcMutation inv = smc_mutate(w, mx.result, i, dir == Direction::Left ? Direction::Right : Direction::Left);
          REQUIRE(inv.ok);
          CHECK(inv.result == x);
        }
    }
  }
}

TEST_CASE("mutation existence by shift") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  for (int i = 0; i < 2; ++i) {
    CHECK(smc_mutation_exists(w, simples_at(w, 0), i, Direction::Left));
    CHECK_FALSE(smc_mutation_exists(w, simples_at(w, 2), i, Direction::Left));
    CHECK(smc_mutation_exists(w, simples_at(w, 2), i, Direction::Right));
  }
  SMC x = {S(t, "P1", 2), S(t, "I1", 1)};
  CHECK_FALSE(smc_mutation_exists(w, x, 0, Direction::Left));
  CHECK(smc_mutation_exists(w, x, 1, Direction::Left));
}

TEST_CASE("projections to semibricks") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  CHECK(pi1(w, simples_at(w, 0)) == as_set(simples_at(w, 0)));
  CHECK(pi2(w, simples_at(w, 0)).empty());
  SMC x = {S(t, "P1", 2), S(t, "I1", 1)};
  CHECK(pi1(w, x) == sub(t, "I1@1"));
  CHECK(pi2(w, x) == sub(t, "P1@1,I1"));
  SMC y = {S(t, "P2"), S(t, "I1", 1)};
  CHECK(pi1(w, y) == sub(t, "P2,I1@1"));
  CHECK(pi2(w, y) == sub(t, "I1"));
  for (auto [f, d] : kCases) {
    Window wc = window(f, d);
    for (const auto& p : enumerate_silting_exhaustive(wc)) {
      SMC s = smc_of_silting(wc, p);
      const Subcat a = pi1(wc, s), b = pi2(wc, s);
      CHECK(is_semibrick(wc, to_list(a)));
      CHECK(is_semibrick(wc, to_list(b)));
      Subcat u = a;
      for (const auto& z : b) u.insert({z.ind, z.shift + 1});
      CHECK(u == as_set(s));
    }
  }
}

TEST_CASE("brute-force SMC scan matches the silting image") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    auto all = enumerate_silting_exhaustive(w);
    std::set<std::set<Summand>> img;
    for (const auto& p : all) img.insert(as_set(smc_of_silting(w, p)));
    CHECK(img.size() == all.size());  // injective
    std::set<std::set<Summand>> brute;
    for (const auto& x : enumerate_smc_bruteforce(w)) brute.insert(as_set(x));
    CHECK(brute == img);
  }
}

TEST_CASE("cohomology of the SMC against the Q-sequence") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    const IndTable& t = w.t();
    for (const auto& p : enumerate_silting_exhaustive(w)) {
      SMC x = smc_of_silting(w, p);
      QSequence qs = q_sequence(w, p);
      CHECK(cohom_multiplicity_check(w, p, x, qs).ok);
      CHECK(distinct_top_check(w, x, qs).ok);
      // dim H^{-j}(X_i) is the total dimension of the module when j is its shift
      for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j <= d; ++j) {
          const auto& dims = t.inds[x[i].ind].dims;
          const int h = x[i].shift == j ? std::accumulate(dims.begin(), dims.end(), 0) : 0;
          const auto c = qs.q[j].counts();
          const int mult = c.count(p[i]) ? c.at(p[i]) : 0;
          CHECK(h == mult);
        }
    }
  }
}

TEST_CASE("endomorphism algebras and the wide-subcategory count") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  for (const auto& p : enumerate_silting_exhaustive(w)) {
    EndAlgebra e = end_algebra(w, p);
    CHECK(e.alg.is_associative());
    CHECK(e.alg.unit_ok());
    std::size_t dim = 0;
    for (const auto& a : p)
      for (const auto& b : p) dim += hom_dim(t, a, b);
    CHECK(e.alg.dim == dim);
    WideCount c = wide_modcat_check(w, p, smc_of_silting(w, p));
    CHECK(c.ok());
  }
  WideCount a = wide_modcat_check(w, regular(w, 0), smc_of_silting(w, regular(w, 0)));
  CHECK(a.simples_f == 2);
  const SiltObj q = silt(t, "P2@2,I1@1");
  WideCount b = wide_modcat_check(w, q, smc_of_silting(w, q));
  CHECK(b.simples_f == 1);
  CHECK(b.pi1_size == 1);
  const SiltObj r = silt(t, "P2,P1@1");
  WideCount c = wide_modcat_check(w, r, smc_of_silting(w, r));
  CHECK(c.simples_f == 2);
}
