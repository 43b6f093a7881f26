#include "dx/silting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace dx {

namespace {

WObj obj(const Summand& s) { return WObj::one(s.ind, s.shift); }

// Hom(a, b[k]) can only be nonzero for k in {a-b, a-b+1}.
bool compatible(const IndTable& t, const Summand& a, const Summand& b) {
  for (int k : {a.shift - b.shift, a.shift - b.shift + 1})
    if (k > 0 && hom_dim(t, a, b, k)) return false;
  return true;
}

}  // namespace

std::vector<Summand> silting_candidates(const Window& w) {
  std::vector<Summand> out = w.objects();
  for (int v = 0; v < w.t().quiver.n(); ++v) out.push_back({w.t().projective_index(v), w.d});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_candidate(const Window& w, const Summand& s) {
  if (s.shift >= 0 && s.shift <= w.d - 1) return true;
  return s.shift == w.d && w.t().proj_vertex[s.ind] >= 0;
}

bool is_presilting(const Window& w, const std::vector<Summand>& p) {
  for (const auto& a : p)
    for (const auto& b : p)
      if (!compatible(w.t(), a, b)) return false;
  return true;
}

bool is_silting(const Window& w, const std::vector<Summand>& p) {
  std::set<Summand> distinct(p.begin(), p.end());
  return static_cast<int>(distinct.size()) == w.t().quiver.n() && distinct.size() == p.size() && is_presilting(w, p);
}

std::vector<SiltObj> enumerate_silting_exhaustive(const Window& w) {
  const auto cands = silting_candidates(w);
  const std::size_t m = cands.size();
  const std::size_t n = w.t().quiver.n();
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ok[i][j] = compatible(w.t(), cands[i], cands[j]);

  std::vector<SiltObj> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == n) {
      SiltObj p;
      for (auto i : cur) p.push_back(cands[i]);
      out.push_back(p);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      if (!ok[i][i]) continue;
      if (!std::all_of(cur.begin(), cur.end(), [&](std::size_t j) { return ok[i][j] && ok[j][i]; })) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

SiltObj regular(const Window& w, int shift) {
  SiltObj p;
  for (int v = 0; v < w.t().quiver.n(); ++v) p.push_back({w.t().projective_index(v), shift});
  std::sort(p.begin(), p.end());
  return p;
}

WObj silt_wobj(const SiltObj& p) { return WObj::of(p); }

std::string silt_str(const IndTable& t, const SiltObj& p) {
  return subcat_str(t, Subcat(p.begin(), p.end()));
}

MutationResult mutate(const Window& w, const SiltObj& p, int i, Direction dir) {
  const IndTable& t = w.t();
  MutationResult out;
  out.replaced = p.at(i);
  std::vector<Summand> others;
  for (int j = 0; j < static_cast<int>(p.size()); ++j)
    if (j != i) others.push_back(p[j]);
  const WObj pi = obj(p[i]);
  WObj c = dir == Direction::Left ? cone(t, min_left_approx(t, pi, others).map)
                                  : cocone(t, min_right_approx(t, pi, others).map);
  if (c.size() != 1) throw AlgebraError("mutation produced " + wobj_str(t, c) + ", expected one indecomposable");
  out.added = c.s[0];
  if (!is_candidate(w, out.added)) {
    out.reason = "new summand " + wobj_str(t, c) + " at shift " + std::to_string(out.added.shift) +
                 " leaves the window";
    return out;
  }
  out.result = others;
  out.result.push_back(out.added);
  std::sort(out.result.begin(), out.result.end());
  if (!is_silting(w, out.result)) throw AlgebraError("mutation result " + silt_str(t, out.result) + " is not silting");
  out.ok = true;
  return out;
}

QSequence q_sequence(const Window& w, const SiltObj& p) {
  const IndTable& t = w.t();
  QSequence qs;
  qs.z.push_back(silt_wobj(regular(w)));
  for (int j = 0; j < w.d; ++j) {
    Approx ap = min_left_approx(t, qs.z[j], p);
    qs.q.push_back(ap.obj);
    qs.f.push_back(ap.map);
    qs.z.push_back(cone(t, ap.map));
  }
  qs.q.push_back(qs.z[w.d]);
  qs.f.push_back(identity_mor(t, qs.z[w.d]));
  return qs;
}

Verdict check_q_sequence(const Window& w, const SiltObj& p, const QSequence& qs) {
  const IndTable& t = w.t();
  const Subcat addp(p.begin(), p.end());
  const WObj po = silt_wobj(p);
  for (int j = 0; j <= w.d; ++j) {
    if (!all_in(qs.q[j], addp)) return {false, "Q_" + std::to_string(j) + " not in add P"};
    if (j < w.d && cone(t, qs.f[j]) != qs.z[j + 1])
      return {false, "triangle " + std::to_string(j) + " does not close"};
    // Hom(Z_j, P[l]) = 0 for l >= 1, and Hom(P, Z_j[l]) = 0 for l >= d-j+1.
    for (int l = 1; l <= w.d + 2; ++l) {
      if (hom_dim(t, qs.z[j], po, l)) return {false, "Hom(Z_" + std::to_string(j) + ", P[" + std::to_string(l) + "]) != 0"};
      if (l >= w.d - j + 1 && hom_dim(t, po, qs.z[j], l))
        return {false, "Hom(P, Z_" + std::to_string(j) + "[" + std::to_string(l) + "]) != 0"};
    }
  }
  return {true, ""};
}

bool mutation_exists(const SiltObj& p, const QSequence& qs, int i, Direction dir) {
  const WObj& q = dir == Direction::Left ? qs.q.back() : qs.q.front();
  return std::find(q.s.begin(), q.s.end(), p.at(i)) == q.s.end();
}

bool mutation_exists(const Window& w, const SiltObj& p, int i, Direction dir) {
  return mutation_exists(p, q_sequence(w, p), i, dir);
}

bool silting_leq(const Window& w, const SiltObj& p, const SiltObj& q) {
  for (const auto& a : q)
    for (const auto& b : p)
      for (int k : {a.shift - b.shift, a.shift - b.shift + 1})
        if (k > 0 && hom_dim(w.t(), a, b, k)) return false;
  return true;
}

Poset hasse_poset(const Window& w, const std::vector<SiltObj>& nodes) {
  Poset ps;
  ps.nodes = nodes;
  const int n = static_cast<int>(nodes.size());
  ps.leq.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ps.leq[i][j] = silting_leq(w, nodes[i], nodes[j]);
  for (int lo = 0; lo < n; ++lo)
    for (int up = 0; up < n; ++up) {
      if (lo == up || !ps.leq[lo][up]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != lo && k != up && ps.leq[lo][k] && ps.leq[k][up]) cover = false;
      if (cover) ps.hasse.emplace_back(up, lo);
    }
  std::sort(ps.hasse.begin(), ps.hasse.end());
  return ps;
}

std::vector<MutationEdge> mutation_edges(const Window& w, const std::vector<SiltObj>& nodes) {
  std::map<SiltObj, int> index;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) index[nodes[i]] = i;
  std::vector<MutationEdge> out;
  for (int u = 0; u < static_cast<int>(nodes.size()); ++u)
    for (int i = 0; i < static_cast<int>(nodes[u].size()); ++i) {
      MutationResult r = mutate(w, nodes[u], i, Direction::Left);
      if (!r.ok) continue;
      auto it = index.find(r.result);
      if (it != index.end()) out.push_back({u, it->second, nodes[u][i]});
    }
  return out;
}

std::vector<SiltObj> enumerate_by_mutation(const Window& w) {
  std::set<SiltObj> seen{regular(w)};
  std::deque<SiltObj> todo{regular(w)};
  while (!todo.empty()) {
    SiltObj p = todo.front();
    todo.pop_front();
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      for (Direction dir : {Direction::Left, Direction::Right}) {
        MutationResult r = mutate(w, p, i, dir);
        if (r.ok && seen.insert(r.result).second) todo.push_back(r.result);
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace dx
