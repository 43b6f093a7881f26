#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "common.hpp"

using namespace dx;
using dxtest::S;
using dxtest::silt;
using dxtest::window;

namespace {

const std::vector<std::pair<const char*, int>> kCases = {{"a2.qv", 1}, {"a2.qv", 2}, {"a2.qv", 3},
                                                         {"a3.qv", 1}, {"a3.qv", 2}, {"a3_alt.qv", 2}};

// Hom(M@a, N@b[k]) straight from the tables: Hom if b+k-a = 0, Ext^1 if 1.
int table_hom(const IndTable& t, const Summand& x, const Summand& y, int k) {
  const int deg = y.shift + k - x.shift;
  return deg == 0 ? t.G[x.ind][y.ind] : deg == 1 ? t.E[x.ind][y.ind] : 0;
}

// Basic presilting n-subsets of the candidates, by brute force over subsets.
std::set<SiltObj> silting_oracle(const Window& w) {
  const IndTable& t = w.t();
  std::vector<Summand> cand;
  for (int a = 0; a < t.size(); ++a)
    for (int j = 0; j <= w.d; ++j)
      if (j < w.d || t.proj_vertex[a] >= 0) cand.push_back({a, j});
  const int n = t.quiver.n();
  std::set<SiltObj> out;
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == n) {
      SiltObj p;
      for (int i : idx) p.push_back(cand[i]);
      for (const auto& a : p)
        for (const auto& b : p)
          for (int k = 1; k <= w.d + 1; ++k)
            if (table_hom(t, a, b, k)) return;
      std::sort(p.begin(), p.end());
      out.insert(p);
      return;
    }
    for (int i = from; i < static_cast<int>(cand.size()); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::size_t index_of(const SiltObj& p, const Summand& s) {
  return static_cast<std::size_t>(std::find(p.begin(), p.end(), s) - p.begin());
}

}  // namespace

TEST_CASE("candidates") {
  Window w = window("a2.qv", 2);
  CHECK(silting_candidates(w).size() == 3 * 2 + 2);
  const IndTable& t = w.t();
  CHECK(is_candidate(w, S(t, "P1", 2)));
  CHECK_FALSE(is_candidate(w, S(t, "I1", 2)));
  CHECK_FALSE(is_candidate(w, S(t, "P1", 3)));
}

TEST_CASE("silting checks") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  CHECK(is_silting(w, regular(w, 0)));
  CHECK(is_silting(w, regular(w, 2)));
  CHECK_FALSE(is_silting(w, silt(t, "P2,I1")));
  CHECK_FALSE(is_silting(w, silt(t, "P2")));
  CHECK(is_presilting(w, silt(t, "P2")));
}

TEST_CASE("exhaustive enumeration against the subset oracle") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    auto got = enumerate_silting_exhaustive(w);
    auto want = silting_oracle(w);
    CHECK(std::set<SiltObj>(got.begin(), got.end()) == want);
    CHECK(got.size() == want.size());
    CHECK(std::is_sorted(got.begin(), got.end()));
  }
}

TEST_CASE("silting counts") {
  CHECK(enumerate_silting_exhaustive(window("a2.qv", 1)).size() == 5);
  CHECK(enumerate_silting_exhaustive(window("a2.qv", 2)).size() == 12);
  CHECK(enumerate_silting_exhaustive(window("a3.qv", 1)).size() == 14);
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  auto all = enumerate_silting_exhaustive(w);
  for (const char* lit : {"P2,P1", "P1,I1", "P2,P1@1", "P2@2,I1@1", "P2@2,P1@2"})
    CHECK(std::find(all.begin(), all.end(), silt(t, lit)) != all.end());
}

TEST_CASE("mutation BFS reaches every silting object") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    auto a = enumerate_silting_exhaustive(w), b = enumerate_by_mutation(w);
    CHECK(std::set<SiltObj>(a.begin(), a.end()) == std::set<SiltObj>(b.begin(), b.end()));
    CHECK(std::find(b.begin(), b.end(), regular(w, 0)) != b.end());
    CHECK(std::find(b.begin(), b.end(), regular(w, d)) != b.end());
  }
}

TEST_CASE("mutation examples on A2, d = 2") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  const SiltObj lam = regular(w, 0);
  MutationResult m = mutate(w, lam, static_cast<int>(index_of(lam, S(t, "P2"))), Direction::Left);
  REQUIRE(m.ok);
  CHECK(m.result == silt(t, "I1,P1"));
  m = mutate(w, lam, static_cast<int>(index_of(lam, S(t, "P1"))), Direction::Left);
  REQUIRE(m.ok);
  CHECK(m.result == silt(t, "P2,P1@1"));
  const SiltObj p = silt(t, "P2@2,I1@1");
  m = mutate(w, p, static_cast<int>(index_of(p, S(t, "I1", 1))), Direction::Left);
  REQUIRE(m.ok);
  CHECK(m.result == regular(w, 2));
  m = mutate(w, p, static_cast<int>(index_of(p, S(t, "P2", 2))), Direction::Left);
  CHECK_FALSE(m.ok);
  CHECK(m.reason.find("3") != std::string::npos);
}

TEST_CASE("mutation inverts, moves strictly in the order, and agrees with the Q-sequence criterion") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    for (const auto& p : enumerate_silting_exhaustive(w))
      for (int i = 0; i < static_cast<int>(p.size()); ++i) {
        QSequence qs = q_sequence(w, p);
        bool any = false;
        for (Direction dir : {Direction::Left, Direction::Right}) {
          MutationResult m = mutate(w, p, i, dir);
          CHECK(m.ok == mutation_exists(p, qs, i, dir));
          CHECK(m.ok == mutation_exists(w, p, i, dir));
          any |= m.ok;
          if (!m.ok) continue;
          CHECK(is_silting(w, m.result));
          const Direction back = dir == Direction::Left ? Direction::Right : Direction::Left;
          MutationResult r = mutate(w, m.result, static_cast<int>(index_of(m.result, m.added)), back);
          REQUIRE(r.ok);
          CHECK(r.result == p);
          if (dir == Direction::Left) {
            CHECK(silting_leq(w, m.result, p));
            CHECK_FALSE(silting_leq(w, p, m.result));
          } else {
            CHECK(silting_leq(w, p, m.result));
            CHECK_FALSE(silting_leq(w, m.result, p));
          }
        }
        CHECK(any);
      }
  }
}

TEST_CASE("Q-sequences") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  QSequence top = q_sequence(w, regular(w, 0));
  CHECK(top.q[0] == silt_wobj(regular(w, 0)));
  CHECK(top.q[1].empty());
  CHECK(top.q[2].empty());
  QSequence bot = q_sequence(w, regular(w, 2));
  CHECK(bot.q[0].empty());
  CHECK(bot.q[1].empty());
  CHECK(bot.q[2] == silt_wobj(regular(w, 2)));
  const SiltObj p = silt(t, "P2@2,I1@1");
  QSequence qs = q_sequence(w, p);
  CHECK(qs.q[0].empty());
  CHECK(qs.q[1] == parse_wobj(t, "I1@1"));
  CHECK(qs.q[2] == parse_wobj(t, "P2@2^2"));
  for (auto [f, d] : kCases) {
    Window wc = window(f, d);
    for (const auto& s : enumerate_silting_exhaustive(wc)) CHECK(check_q_sequence(wc, s, q_sequence(wc, s)).ok);
  }
}

TEST_CASE("mutation existence examples") {
  Window w = window("a2.qv", 2);
  const IndTable& t = w.t();
  for (int i = 0; i < 2; ++i) {
    CHECK(mutation_exists(w, regular(w, 0), i, Direction::Left));
    CHECK_FALSE(mutation_exists(w, regular(w, 0), i, Direction::Right));
    CHECK_FALSE(mutation_exists(w, regular(w, 2), i, Direction::Left));
    CHECK(mutation_exists(w, regular(w, 2), i, Direction::Right));
  }
  const SiltObj p = silt(t, "P2@2,I1@1");
  const int i1 = static_cast<int>(index_of(p, S(t, "I1", 1))), p2 = static_cast<int>(index_of(p, S(t, "P2", 2)));
  CHECK(mutation_exists(w, p, i1, Direction::Left));
  CHECK_FALSE(mutation_exists(w, p, p2, Direction::Left));
  CHECK(mutation_exists(w, p, i1, Direction::Right));
  CHECK(mutation_exists(w, p, p2, Direction::Right));
}

TEST_CASE("silting order and Hasse diagram") {
  for (auto [f, d] : kCases) {
    Window w = window(f, d);
    const IndTable& t = w.t();
    auto all = enumerate_silting_exhaustive(w);
    Poset ps = hasse_poset(w, all);
    const std::size_t n = all.size();
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(ps.leq[a][a]);
      // oracle: P <= Q iff Hom(Q, P[k]) = 0 for k > 0
      for (std::size_t b = 0; b < n; ++b) {
        bool want = true;
        for (const auto& q : all[b])
          for (const auto& x : all[a])
            for (int k = 1; k <= d + 1; ++k) want &= table_hom(t, q, x, k) == 0;
        CHECK(static_cast<bool>(ps.leq[a][b]) == want);
      }
      CHECK(silting_leq(w, all[a], regular(w, 0)));
      CHECK(silting_leq(w, regular(w, d), all[a]));
    }
    std::set<std::pair<int, int>> h(ps.hasse.begin(), ps.hasse.end()), m;
    for (const auto& e : mutation_edges(w, all)) m.insert({e.upper, e.lower});
    CHECK(h == m);
  }
}
