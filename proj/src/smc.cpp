#include "dx/smc.hpp"

#include <algorithm>
#include <functional>

namespace dx {

namespace {

WObj obj(const Summand& s) { return WObj::one(s.ind, s.shift); }

// Hom(a, x[m]) = 0 outside m in {a.shift - x.shift, a.shift - x.shift + 1}.
bool pairs_only_with(const IndTable& t, const SiltObj& p, std::size_t i, const Summand& x) {
  for (std::size_t k = 0; k < p.size(); ++k)
    for (int m : {p[k].shift - x.shift, p[k].shift - x.shift + 1}) {
      const int h = hom_dim(t, p[k], x, m);
      if (k == i && m == 0) {
        if (h != 1) return false;
      } else if (h) {
        return false;
      }
    }
  return true;
}

}  // namespace

SMC smc_of_silting(const Window& w, const SiltObj& p) {
  const IndTable& t = w.t();
  const auto cands = window_objects(t, 0, w.d);
  SMC out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<Summand> hits;
    for (const auto& x : cands)
      if (pairs_only_with(t, p, i, x)) hits.push_back(x);
    if (hits.size() != 1)
      throw AlgebraError("silting " + silt_str(t, p) + ": " + std::to_string(hits.size()) + " partners for " +
                         summand_name(t, p[i]));
    out.push_back(hits[0]);
  }
  return out;
}

bool is_smc(const Window& w, const std::vector<Summand>& x) {
  const IndTable& t = w.t();
  if (static_cast<int>(x.size()) != t.quiver.n()) return false;
  for (const auto& a : x) {
    if (a.shift < 0 || a.shift > w.d) return false;
    if (hom_dim(t, a, a) != 1) return false;
    for (const auto& b : x) {
      if (&a != &b && (a == b || hom_dim(t, a, b))) return false;
      // Negative shifts: only k = b.shift - a.shift (or one less) can be nonzero.
      for (int k : {a.shift - b.shift, a.shift - b.shift + 1})
        if (k < 0 && hom_dim(t, a, b, k)) return false;
    }
  }
  return true;
}

std::string smc_str(const IndTable& t, const SMC& x) {
  std::string s = "{";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + summand_name(t, x[i]);
  return s + "}";
}

SmcMutation smc_mutate(const Window& w, const SMC& x, int i, Direction dir) {
  const IndTable& t = w.t();
  SmcMutation out;
  out.result = x;
  const Summand xi = x.at(i);
  const int step = dir == Direction::Left ? 1 : -1;
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (j == i) continue;
    // Left: cone of the universal map X_j[-1] -> X_i^m. Right: cocone of X_i^m -> X_j[1].
    const WObj a = WObj::one(x[j].ind, x[j].shift - step);
    WObj c = dir == Direction::Left ? cone(t, universal_from(t, a, {xi})) : cocone(t, universal_into(t, {xi}, a));
    if (c.size() != 1) throw AlgebraError("SMC mutation produced the decomposable " + wobj_str(t, c));
    out.result[j] = c.s[0];
  }
  out.result[i] = {xi.ind, xi.shift + step};
  for (const auto& s : out.result)
    if (s.shift < 0 || s.shift > w.d) {
      out.reason = summand_name(t, s) + " leaves the shift range 0.." + std::to_string(w.d);
      return out;
    }
  if (!is_smc(w, out.result)) throw AlgebraError("SMC mutation result " + smc_str(t, out.result) + " is not an SMC");
  out.ok = true;
  return out;
}

bool smc_mutation_exists(const Window& w, const SMC& x, int i, Direction dir) {
  return dir == Direction::Left ? x.at(i).shift <= w.d - 1 : x.at(i).shift >= 1;
}

Subcat pi1(const Window& w, const SMC& x) {
  Subcat out;
  for (const auto& s : x)
    if (s.shift <= w.d - 1) out.insert(s);
  return out;
}

Subcat pi2(const Window&, const SMC& x) {
  Subcat out;
  for (const auto& s : x)
    if (s.shift >= 1) out.insert({s.ind, s.shift - 1});
  return out;
}

std::vector<SMC> enumerate_smc_bruteforce(const Window& w) {
  const IndTable& t = w.t();
  const auto cands = window_objects(t, 0, w.d);
  const std::size_t n = t.quiver.n();
  std::vector<SMC> out;
  SMC cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == n) {
      if (is_smc(w, cur)) out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < cands.size(); ++k) {
      const Summand& b = cands[k];
      bool ok = hom_dim(t, b, b) == 1;
      for (const auto& a : cur) {
        if (!ok) break;
        ok = !hom_dim(t, a, b) && !hom_dim(t, b, a);
        for (int s : {-1, 0}) {
          const int ka = a.shift - b.shift + s, kb = b.shift - a.shift + s;
          if (ka < 0 && hom_dim(t, a, b, ka)) ok = false;
          if (kb < 0 && hom_dim(t, b, a, kb)) ok = false;
        }
      }
      if (!ok) continue;
      cur.push_back(b);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Verdict cohom_multiplicity_check(const Window& w, const SiltObj& p, const SMC& x, const QSequence& qs) {
  const IndTable& t = w.t();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j <= w.d; ++j) {
      const int h = x[i].shift == j ? t.inds[x[i].ind].total_dim() : 0;
      const int mult = static_cast<int>(std::count(qs.q[j].s.begin(), qs.q[j].s.end(), p[i]));
      const int end = hom_dim(t, x[i], x[i]);
      if (h != mult * end)
        return {false, "dim H^-" + std::to_string(j) + "(" + summand_name(t, x[i]) + ") = " + std::to_string(h) +
                           " but P_i occurs " + std::to_string(mult) + " times in Q_" + std::to_string(j)};
      if ((h != 0) != (mult != 0)) return {false, "support mismatch at " + summand_name(t, x[i])};
    }
  return {true, ""};
}

Verdict distinct_top_check(const Window& w, const SMC& x, const QSequence& qs) {
  const IndTable& t = w.t();
  for (int j = 0; j <= w.d; ++j)
    for (const auto& s : x) {
      const WObj xo = obj(s);
      const int nq = hom_dim(t, qs.q[j], xo), nz = hom_dim(t, qs.z[j], xo);
      if (nq != nz)
        return {false, "dim Hom(Q_" + std::to_string(j) + ", X) != dim Hom(Z_" + std::to_string(j) + ", X) for " +
                           summand_name(t, s)};
      if (!nq) continue;
      auto basis = hom_basis_w(t, qs.q[j], xo);
      QMat m(static_cast<std::size_t>(nz), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        QVec v = flatten(compose(t, basis[c], qs.f[j]));
        for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = v[r];
      }
      if (static_cast<int>(rank(m)) != nq)
        return {false, "Hom(f_" + std::to_string(j) + ", " + summand_name(t, s) + ") is not injective"};
    }
  return {true, ""};
}

EndAlgebra end_algebra(const Window& w, const SiltObj& p) {
  const IndTable& t = w.t();
  const WObj po = silt_wobj(p);
  const auto basis = hom_basis_w(t, po, po);
  EndAlgebra e;
  FDAlg& a = e.alg;
  a.dim = basis.size();
  a.c.assign(a.dim * a.dim * a.dim, Q(0));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      QVec v = flatten(compose(t, basis[i], basis[j]));
      for (std::size_t k = 0; k < a.dim; ++k) a.at(i, j, k) = v[k];
    }
  a.unit = flatten(identity_mor(t, po));
  for (std::size_t i = 0; i < p.size(); ++i) {
    WMor f = zero_mor(t, po, po);
    f.blocks[i][i] = flatten(identity_mor(t, obj(p[i])));
    e.idem.push_back(flatten(f));
  }
  a.idempotents = e.idem;
  return e;
}

WideCount wide_modcat_check(const Window& w, const SiltObj& p, const SMC& x) {
  EndAlgebra e = end_algebra(w, p);
  QVec f(e.alg.dim, Q(0)), fd(e.alg.dim, Q(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < e.alg.dim; ++k) {
      if (x[i].shift == w.d) f[k] += e.idem[i][k];
      if (x[i].shift == 0) fd[k] += e.idem[i][k];
    }
  WideCount out;
  out.simples_f = count_simples(e.alg, {f});
  out.simples_fdual = count_simples(e.alg, {fd});
  out.pi1_size = pi1(w, x).size();
  out.pi2_size = pi2(w, x).size();
  return out;
}

}  // namespace dx
