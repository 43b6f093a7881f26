#include "dx/subcat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dx {

namespace {

WObj obj(const Summand& s) { return WObj::one(s.ind, s.shift); }

// Nonzero vectors m with m_s <= bound_s: all of them when there are at most
// 64, otherwise 16 random draws.
std::vector<std::vector<int>> multiplicity_vectors(const std::vector<std::pair<Summand, int>>& rel,
                                                   std::mt19937_64& rng) {
  long total = 1;
  for (const auto& r : rel) total = std::min<long>(total * (r.second + 1), 1 << 20);
  std::vector<std::vector<int>> vecs;
  if (total <= 64) {
    std::vector<int> m(rel.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < m.size() && m[i] == rel[i].second) m[i++] = 0;
      if (i == m.size()) break;
      ++m[i];
      vecs.push_back(m);
    }
  } else {
    for (int r = 0; r < 16; ++r) {
      std::vector<int> m(rel.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::uniform_int_distribution<int>(0, rel[i].second)(rng);
      vecs.push_back(m);
    }
  }
  return vecs;
}

// Memoized search for d-factors (or d-subobjects when dual) of add(gens).
// Level k asks for k triangles Z_i -> X_i -> Z_{i-1} with Z_i in the window.
class FactorSearch {
 public:
  FactorSearch(const Window& w, const Subcat& gens, bool dual)
      : w_(w), t_(w.t()), gens_(gens), list_(gens.begin(), gens.end()), dual_(dual), rng_(w.seed) {
    one_step_ = dual ? sub1(w, gens) : fac1(w, gens);
  }

  bool member(const Summand& z, int k) {
    if (k == 0) return true;
    if (gens_.count(z)) return true;
    if (!one_step_.count(z)) return false;
    auto key = std::make_pair(z, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = false;  // guards against re-entry while searching
    const bool r = search(z, k);
    memo_[key] = r;
    return r;
  }

 private:
  bool accept(const WMor& f, int k) {
    WObj z1 = dual_ ? cone(t_, f) : cocone(t_, f);
    if (!in_range(z1, 0, w_.d - 1)) return false;
    for (const auto& s : z1.counts())
      if (!member(s.first, k - 1)) return false;
    return true;
  }

  WMor rand_map(const WObj& x, const WObj& z) { return dual_ ? random_mor(t_, z, x, rng_) : random_mor(t_, x, z, rng_); }

  bool search(const Summand& zs, int k) {
    const WObj z = obj(zs);
    if (accept(dual_ ? zero_mor(t_, z, WObj{}) : zero_mor(t_, WObj{}, z), k)) return true;
    if (list_.empty()) return false;

    auto hd = [&](const Summand& s) { return dual_ ? hom_dim(t_, zs, s) : hom_dim(t_, s, zs); };
    std::vector<std::pair<Summand, int>> rel;
    for (const auto& s : list_)
      if (int n = hd(s)) rel.emplace_back(s, n);
    if (rel.empty()) return false;

    if (dual_) {
      if (accept(min_left_approx(t_, z, list_).map, k)) return true;
      if (accept(universal_from(t_, z, list_), k)) return true;
    } else {
      if (accept(min_right_approx(t_, z, list_).map, k)) return true;
      if (accept(universal_into(t_, list_, z), k)) return true;
    }
    for (const auto& [s, n] : rel) {
      if (accept(dual_ ? universal_from(t_, z, {s}) : universal_into(t_, {s}, z), k)) return true;
      auto basis = dual_ ? hom_basis_w(t_, z, obj(s)) : hom_basis_w(t_, obj(s), z);
      for (const auto& b : basis)
        if (accept(b, k)) return true;
    }

    for (const auto& m : multiplicity_vectors(rel, rng_)) {
      WObj x;
      for (std::size_t i = 0; i < m.size(); ++i) x = direct_sum(x, power(rel[i].first, m[i]));
      if (x.empty()) continue;
      for (int r = 0; r < w_.budget; ++r)
        if (accept(rand_map(x, z), k)) return true;
    }
    return false;
  }

  const Window& w_;
  const IndTable& t_;
  const Subcat& gens_;
  std::vector<Summand> list_;
  bool dual_;
  std::mt19937_64 rng_;
  Subcat one_step_;
  std::map<std::pair<Summand, int>, bool> memo_;
};

Subcat filter(const Window& w, const std::function<bool(const Summand&)>& pred) {
  Subcat out;
  for (const auto& z : w.objects())
    if (pred(z)) out.insert(z);
  return out;
}

std::vector<int> euler_class(const IndTable& t, const WObj& x) {
  std::vector<int> v(t.quiver.n(), 0);
  for (const auto& s : x.s) {
    const int sign = (s.shift % 2 == 0) ? 1 : -1;
    for (int i = 0; i < t.quiver.n(); ++i) v[i] += sign * t.inds[s.ind].dims[i];
  }
  return v;
}

std::vector<int> vsum(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Kernel, image, cokernel of a heart morphism, with the heart passed in.
HeartFactorization factor_in_heart(const Window& w, const Subcat& t, const Subcat& heart, const WMor& g,
                                   std::mt19937_64& rng) {
  const IndTable& tb = w.t();
  HeartFactorization out;
  const WObj c = cone(tb, g);
  if (c.empty()) {
    out.found = true;
    out.im = g.src;
    return out;
  }
  // Truncation of C(g) at the shifted aisle (D^{<=-d} * T)[1] yields ker(g)[1] -> C(g) -> coker(g).
  auto in_aisle1 = [&](const Summand& z) {
    if (z.shift >= w.d + 1) return true;
    return z.shift >= 1 && z.shift - 1 <= w.d - 1 && t.count({z.ind, z.shift - 1}) > 0;
  };
  std::vector<Summand> cands;
  for (int s = min_shift(c) - 1; s <= max_shift(c); ++s)
    for (int a = 0; a < tb.size(); ++a) {
      Summand z{a, s};
      if (in_aisle1(z) && hom_dim(tb, obj(z), c) > 0) cands.push_back(z);
    }
  Approx ap = min_right_approx(tb, c, cands);
  out.ker = shifted(ap.obj, -1);
  out.coker = cone(tb, ap.map);
  if (!all_in(out.ker, heart) || !all_in(out.coker, heart)) return out;

  if (out.ker.empty()) {
    out.im = g.src;
  } else {
    // Maps k: ker -> Y with g k = 0; a generic one is the kernel inclusion.
    auto basis = hom_basis_w(tb, out.ker, g.src);
    const std::size_t rows = flatten(zero_mor(tb, out.ker, g.tgt)).size();
    QMat m(rows, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      QVec v = flatten(compose(tb, g, basis[j]));
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = v[i];
    }
    QMat kb = kernel_basis(m);
    if (kb.cols() == 0) return out;
    bool ok = false;
    std::uniform_int_distribution<int> wide(1, 40);
    for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
      WMor k = zero_mor(tb, out.ker, g.src);
      for (std::size_t c2 = 0; c2 < kb.cols(); ++c2) {
        const Q coef(attempt == 0 && kb.cols() == 1 ? 1 : wide(rng) - 20);
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (kb(j, c2) != 0) k = add(k, scale(basis[j], coef * kb(j, c2)));
      }
      WObj im = cone(tb, k);
      if (!all_in(im, heart)) continue;
      // [Y] = [ker] + [im] and [X] = [im] + [coker].
      if (vsum(euler_class(tb, out.ker), euler_class(tb, im)) != euler_class(tb, g.src)) continue;
      if (vsum(euler_class(tb, im), euler_class(tb, out.coker)) != euler_class(tb, g.tgt)) continue;
      out.im = im;
      ok = true;
    }
    if (!ok) return out;
  }
  out.found = true;
  return out;
}

}  // namespace

Subcat Window::all() const {
  auto v = objects();
  return Subcat(v.begin(), v.end());
}

std::vector<Summand> to_list(const Subcat& s) { return {s.begin(), s.end()}; }

// Z = N@0 is a 1-factor iff the images of all maps from S jointly cover N;
// summands with positive shift are 1-factors of 0.
Subcat fac1(const Window& w, const Subcat& s) {
  const IndTable& t = w.t();
  return filter(w, [&](const Summand& z) {
    if (z.shift >= 1) return true;
    const Rep& n = t.inds[z.ind];
    for (int v = 0; v < t.quiver.n(); ++v) {
      if (!n.dims[v]) continue;
      QMat acc(n.dims[v], 0);
      for (const auto& m : s)
        if (m.shift == 0)
          for (const auto& f : t.hom[m.ind][z.ind].basis) acc = QMat::hcat(acc, f.comps[v]);
      if (static_cast<int>(rank(acc)) != n.dims[v]) return false;
    }
    return true;
  });
}

Subcat sub1(const Window& w, const Subcat& s) {
  const IndTable& t = w.t();
  const int top = w.d - 1;
  return filter(w, [&](const Summand& z) {
    if (z.shift != top) return true;
    const Rep& n = t.inds[z.ind];
    for (int v = 0; v < t.quiver.n(); ++v) {
      if (!n.dims[v]) continue;
      QMat acc(0, n.dims[v]);
      for (const auto& m : s)
        if (m.shift == top)
          for (const auto& f : t.hom[z.ind][m.ind].basis) acc = QMat::vcat(acc, f.comps[v]);
      if (static_cast<int>(rank(acc)) != n.dims[v]) return false;
    }
    return true;
  });
}

Subcat fac_d(const Window& w, const Subcat& s) {
  FactorSearch fs(w, s, false);
  return filter(w, [&](const Summand& z) { return fs.member(z, w.d); });
}

Subcat sub_d(const Window& w, const Subcat& s) {
  FactorSearch fs(w, s, true);
  return filter(w, [&](const Summand& z) { return fs.member(z, w.d); });
}

Subcat perp_right(const Window& w, const Subcat& s) {
  return filter(w, [&](const Summand& z) {
    return std::all_of(s.begin(), s.end(), [&](const Summand& x) { return hom_dim(w.t(), x, z) == 0; });
  });
}

Subcat perp_left(const Window& w, const Subcat& s) {
  return filter(w, [&](const Summand& z) {
    return std::all_of(s.begin(), s.end(), [&](const Summand& x) { return hom_dim(w.t(), z, x) == 0; });
  });
}

Subcat perp_le0_right(const Window& w, const Subcat& s) {
  return filter(w, [&](const Summand& z) {
    for (const auto& x : s)
      for (int j = 1 - w.d; j <= 0; ++j)
        if (hom_dim(w.t(), x, z, j)) return false;
    return true;
  });
}

Subcat perp_le0_left(const Window& w, const Subcat& s) {
  return filter(w, [&](const Summand& z) {
    for (const auto& x : s)
      for (int j = 1 - w.d; j <= 0; ++j)
        if (hom_dim(w.t(), z, x, j)) return false;
    return true;
  });
}

Subcat smallest_positive_torsion(const Window& w, const Subcat& s) { return perp_left(w, perp_le0_right(w, s)); }

Subcat smallest_positive_torsionfree(const Window& w, const Subcat& s) {
  return perp_right(w, perp_le0_left(w, s));
}

Verdict is_positive_torsion_class(const Window& w, const Subcat& t) {
  const IndTable& tb = w.t();
  Subcat f = perp_right(w, t);
  Subcat back = perp_left(w, f);
  if (back != t) {
    for (const auto& z : back)
      if (!t.count(z)) return {false, summand_name(tb, z) + " is in the left perp of T^perp but not in T"};
    return {false, "T is not closed: left perp of T^perp is smaller"};
  }
  for (const auto& x : t)
    for (const auto& y : f)
      if (hom_dim(tb, x, y, -1))
        return {false, "Hom(" + summand_name(tb, x) + ", " + summand_name(tb, y) + "[-1]) != 0"};
  return {true, ""};
}

TorsionSplit torsion_decomposition(const Window& w, const WObj& x, const Subcat& t) {
  const IndTable& tb = w.t();
  Approx ap = min_right_approx(tb, x, to_list(t));
  TorsionSplit out{ap.obj, cone(tb, ap.map)};
  if (!in_range(out.fpart, 0, w.d - 1) || !all_in(out.fpart, perp_right(w, t)))
    throw AlgebraError("torsion decomposition: cone " + wobj_str(tb, out.fpart) + " is not in T^perp");
  return out;
}

bool is_semibrick(const Window& w, const std::vector<Summand>& s) {
  const IndTable& tb = w.t();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (hom_dim(tb, s[i], s[i]) != 1) return false;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      if (s[i] == s[j] || hom_dim(tb, s[i], s[j])) return false;
      for (int k = 1 - w.d; k <= -1; ++k)
        if (hom_dim(tb, s[i], s[j], k)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Summand>> enumerate_semibricks(const Window& w) {
  std::vector<Summand> bricks;
  for (const auto& z : w.objects())
    if (hom_dim(w.t(), z, z) == 1) bricks.push_back(z);
  const std::size_t n = bricks.size();
  std::vector<std::vector<char>> ok(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ok[i][j] = ok[j][i] = is_semibrick(w, {bricks[i], bricks[j]});

  std::vector<std::vector<Summand>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::vector<Summand> c;
    for (auto i : cur) c.push_back(bricks[i]);
    out.push_back(c);
    for (std::size_t i = from; i < n; ++i) {
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t j) { return ok[i][j]; })) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

Subcat extension_closure(const Window& w, const Subcat& s) {
  const IndTable& tb = w.t();
  std::mt19937_64 rng(w.seed);
  Subcat cur = s;
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Summand> list(cur.begin(), cur.end());
    Subcat add_now;
    auto take = [&](const WMor& xi) {
      // xi : B -> Y[1]; the middle term of Y -> E -> B is the cocone.
      for (const auto& [z, m] : cocone(tb, xi).counts()) {
        (void)m;
        if (!cur.count(z)) add_now.insert(z);
      }
    };
    for (const auto& b : list) {
      const WObj bo = obj(b);
      std::vector<Summand> targets;
      for (const auto& y : list)
        if (hom_dim(tb, b, y, 1)) targets.push_back({y.ind, y.shift + 1});
      if (targets.empty()) continue;
      for (const auto& y : targets)
        for (const auto& xi : hom_basis_w(tb, bo, obj(y))) take(xi);
      WMor uni = universal_from(tb, bo, targets);
      take(uni);
      for (int r = 0; r < w.budget; ++r) take(random_mor(tb, bo, uni.tgt, rng));
      for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i; j < targets.size(); ++j)
          for (int r = 0; r < w.budget; ++r)
            take(random_mor(tb, bo, direct_sum(obj(targets[i]), obj(targets[j])), rng));
    }
    for (const auto& z : add_now)
      if (z.shift >= 0 && z.shift <= w.d - 1) grew |= cur.insert(z).second;
  }
  return cur;
}

PhiResult phi_closure(const Window& w, const Subcat& s) {
  PhiResult out;
  out.phi = s;
  while (true) {
    Subcat next = extension_closure(w, fac_d(w, out.phi));
    ++out.rounds;
    if (next == out.phi) break;
    out.phi = std::move(next);
  }
  out.matches_t = out.phi == smallest_positive_torsion(w, s);
  return out;
}

Subcat heart_objects(const Window& w, const Subcat& t) {
  Subcat tperp = perp_right(w, t);
  Subcat out;
  for (const auto& z : window_objects(w.t(), 0, w.d)) {
    const bool upper = z.shift == w.d || t.count(z);
    const bool lower = z.shift == 0 || tperp.count({z.ind, z.shift - 1});
    if (upper && lower) out.insert(z);
  }
  return out;
}

bool heart_membership(const Window& w, const WObj& x, const Subcat& t) { return all_in(x, heart_objects(w, t)); }

// A nonzero map out of a simple object is mono, so basis maps from heart
// indecomposables detect every proper subobject.
Subcat heart_simples(const Window& w, const Subcat& t) {
  const IndTable& tb = w.t();
  Subcat heart = heart_objects(w, t);
  Subcat out;
  for (const auto& x : heart) {
    bool simple = true;
    for (const auto& y : heart) {
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

Subcat w_prime(const Window& w, const Subcat& t) {
  Subcat out;
  for (const auto& x : t)
    if (std::all_of(t.begin(), t.end(), [&](const Summand& y) { return hom_dim(w.t(), y, x, -1) == 0; }))
      out.insert(x);
  return out;
}

Subcat w_prime_via_heart(const Window& w, const Subcat& t) {
  Subcat heart = heart_objects(w, t);
  Subcat out;
  for (const auto& x : t)
    if (heart.count(x)) out.insert(x);
  return out;
}

HeartFactorization heart_factorization(const Window& w, const Subcat& t, const WMor& g, std::mt19937_64& rng) {
  return factor_in_heart(w, t, heart_objects(w, t), g, rng);
}

WppResult w_doubleprime_oracle(const Window& w, const Subcat& t, int budget) {
  const IndTable& tb = w.t();
  std::mt19937_64 rng(w.seed);
  const Subcat wp = w_prime(w, t);
  const Subcat heart = heart_objects(w, t);
  const std::vector<Summand> list(wp.begin(), wp.end());
  WppResult out;

  for (const auto& x : list) {
    const WObj xo = obj(x);
    std::vector<WMor> maps;
    std::vector<std::pair<Summand, int>> rel;
    for (const auto& y : list)
      if (int n = hom_dim(tb, y, x)) rel.emplace_back(y, n);
    if (!rel.empty()) {
      maps.push_back(min_right_approx(tb, xo, list).map);
      maps.push_back(universal_into(tb, list, xo));
      for (const auto& m : multiplicity_vectors(rel, rng)) {
        WObj y;
        for (std::size_t i = 0; i < m.size(); ++i) y = direct_sum(y, power(rel[i].first, m[i]));
        if (y.size() < 3) continue;  // small sources are covered below
        for (int r = 0; r < budget; ++r) maps.push_back(random_mor(tb, y, xo, rng));
      }
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const WObj yo = obj(list[i]);
      if (!hom_dim(tb, yo, xo)) continue;
      for (auto& b : hom_basis_w(tb, yo, xo)) maps.push_back(std::move(b));
      for (int r = 0; r < budget; ++r) maps.push_back(random_mor(tb, yo, xo, rng));
      for (std::size_t j = i; j < list.size(); ++j) {
        WObj y2 = direct_sum(yo, obj(list[j]));
        for (int r = 0; r < budget; ++r) maps.push_back(random_mor(tb, y2, xo, rng));
      }
    }
    bool admissible_all = true;
    for (const auto& g : maps) {
      if (is_zero(g)) continue;
      HeartFactorization hf = factor_in_heart(w, t, heart, g, rng);
      if (!hf.found) {
        out.conclusive = false;
        out.inconclusive.push_back(wobj_str(tb, g.src) + " -> " + summand_name(tb, x));
        continue;
      }
      if (!all_in(hf.ker, wp) || !all_in(hf.im, wp) || !all_in(hf.coker, wp)) {
        admissible_all = false;
        break;
      }
    }
    if (admissible_all) out.members.insert(x);
  }
  return out;
}

}  // namespace dx
