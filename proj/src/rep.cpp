#include "dx/rep.hpp"

#include <algorithm>

namespace dx {

int Rep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

bool Rep::well_formed(const Quiver& q) const {
  if (static_cast<int>(dims.size()) != q.n() || mats.size() != q.arrows.size()) return false;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& ar = q.arrows[a];
    if (mats[a].rows() != static_cast<std::size_t>(dims[ar.tgt]) || mats[a].cols() != static_cast<std::size_t>(dims[ar.src]))
      return false;
  }
  return true;
}

Rep zero_rep(const Quiver& q) {
  Rep r;
  r.dims.assign(q.n(), 0);
  for (std::size_t a = 0; a < q.arrows.size(); ++a) r.mats.emplace_back(0, 0);
  return r;
}

namespace {

std::size_t index_of(const std::vector<Path>& ps, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i].arrows == arrows) return i;
  return ps.size();
}

}  // namespace

Rep projective(const Quiver& q, int v) {
  Rep r;
  std::vector<std::vector<Path>> ps(q.n());
  for (int w = 0; w < q.n(); ++w) {
    ps[w] = q.paths(v, w);
    r.dims.push_back(static_cast<int>(ps[w].size()));
  }
  for (const auto& a : q.arrows) {
    QMat m(r.dims[a.tgt], r.dims[a.src]);
    int ai = static_cast<int>(&a - &q.arrows[0]);
    for (std::size_t i = 0; i < ps[a.src].size(); ++i) {
      auto ext = ps[a.src][i].arrows;
      ext.push_back(ai);
      m(index_of(ps[a.tgt], ext), i) = 1;
    }
    r.mats.push_back(m);
  }
  return r;
}

Rep injective(const Quiver& q, int v) {
  Rep r;
  std::vector<std::vector<Path>> ps(q.n());
  for (int u = 0; u < q.n(); ++u) {
    ps[u] = q.paths(u, v);
    r.dims.push_back(static_cast<int>(ps[u].size()));
  }
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    QMat m(r.dims[a.tgt], r.dims[a.src]);
    for (std::size_t i = 0; i < ps[a.src].size(); ++i) {
      const auto& p = ps[a.src][i].arrows;
      if (p.empty() || p[0] != static_cast<int>(ai)) continue;
      std::vector<int> rest(p.begin() + 1, p.end());
      m(index_of(ps[a.tgt], rest), i) = 1;
    }
    r.mats.push_back(m);
  }
  return r;
}

Rep simple(const Quiver& q, int v) {
  Rep r;
  r.dims.assign(q.n(), 0);
  r.dims[v] = 1;
  for (const auto& a : q.arrows) r.mats.emplace_back(r.dims[a.tgt], r.dims[a.src]);
  return r;
}

Rep direct_sum(const Quiver& q, const std::vector<Rep>& parts) {
  Rep r;
  r.dims.assign(q.n(), 0);
  for (const auto& p : parts)
    for (int v = 0; v < q.n(); ++v) r.dims[v] += p.dims[v];
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    QMat m(r.dims[a.tgt], r.dims[a.src]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      m.set_block(ro, co, p.mats[ai]);
      ro += p.dims[a.tgt];
      co += p.dims[a.src];
    }
    r.mats.push_back(m);
  }
  return r;
}

Rep dual_rep(const Quiver&, const Rep& m) {
  Rep r;
  r.dims = m.dims;
  for (const auto& x : m.mats) r.mats.push_back(x.transpose());
  return r;
}

QMat path_matrix(const Quiver& q, const Rep& m, const Path& p) {
  QMat acc = QMat::identity(m.dims[p.src]);
  for (int a : p.arrows) acc = m.mats[a] * acc;
  (void)q;
  return acc;
}

RepMap zero_map(const Rep& m, const Rep& n) {
  RepMap f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.comps.emplace_back(n.dims[v], m.dims[v]);
  return f;
}

RepMap identity_map(const Rep& m) {
  RepMap f;
  for (int d : m.dims) f.comps.push_back(QMat::identity(d));
  return f;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

RepMap add(const RepMap& a, const RepMap& b) {
  RepMap h;
  for (std::size_t v = 0; v < a.comps.size(); ++v) h.comps.push_back(a.comps[v] + b.comps[v]);
  return h;
}

RepMap scale(const RepMap& a, const Q& s) {
  RepMap h;
  for (const auto& c : a.comps) h.comps.push_back(c.scaled(s));
  return h;
}

bool is_zero(const RepMap& f) {
  for (const auto& c : f.comps)
    if (!c.is_zero()) return false;
  return true;
}

bool is_morphism(const Quiver& q, const Rep& m, const Rep& n, const RepMap& f) {
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    if (!(n.mats[ai] * f.comps[a.src] == f.comps[a.tgt] * m.mats[ai])) return false;
  }
  return true;
}

namespace {

// delta(phi)_a = N_a phi_s - phi_t M_a, as a matrix from vec(phi) to the flattened cocycle space.
struct DeltaSystem {
  QMat d;
  std::vector<std::size_t> var_off, cocycle_off;
};

DeltaSystem delta_system(const Quiver& q, const Rep& m, const Rep& n) {
  DeltaSystem s;
  std::size_t nv = 0;
  for (int v = 0; v < q.n(); ++v) {
    s.var_off.push_back(nv);
    nv += static_cast<std::size_t>(n.dims[v]) * m.dims[v];
  }
  std::size_t nc = 0;
  for (const auto& a : q.arrows) {
    s.cocycle_off.push_back(nc);
    nc += static_cast<std::size_t>(n.dims[a.tgt]) * m.dims[a.src];
  }
  s.d = QMat(nc, nv);
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    const int ds = m.dims[a.src], ns = n.dims[a.src], nt = n.dims[a.tgt], mt = m.dims[a.tgt];
    for (int i = 0; i < nt; ++i)
      for (int j = 0; j < ds; ++j) {
        std::size_t row = s.cocycle_off[ai] + static_cast<std::size_t>(i) * ds + j;
        for (int k = 0; k < ns; ++k) s.d(row, s.var_off[a.src] + static_cast<std::size_t>(k) * ds + j) += n.mats[ai](i, k);
        for (int k = 0; k < mt; ++k) s.d(row, s.var_off[a.tgt] + static_cast<std::size_t>(i) * mt + k) -= m.mats[ai](k, j);
      }
  }
  return s;
}

RepMap unflatten_map(const Rep& m, const Rep& n, const std::vector<std::size_t>& off, const QVec& x) {
  RepMap f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    QMat c(n.dims[v], m.dims[v]);
    for (int i = 0; i < n.dims[v]; ++i)
      for (int j = 0; j < m.dims[v]; ++j) c(i, j) = x[off[v] + static_cast<std::size_t>(i) * m.dims[v] + j];
    f.comps.push_back(c);
  }
  return f;
}

}  // namespace

QVec HomSpace::coords(const RepMap& f) const {
  QVec c;
  for (const auto& s : free_slots) c.push_back(f.comps[s.v](s.row, s.col));
  return c;
}

HomSpace hom_space(const Quiver& q, const Rep& m, const Rep& n) {
  DeltaSystem s = delta_system(q, m, n);
  HomSpace h;
  Rref rr = rref(s.d);
  std::vector<bool> piv(s.d.cols(), false);
  for (auto p : rr.pivots) piv[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < s.d.cols(); ++j)
    if (!piv[j]) free_vars.push_back(j);
  for (std::size_t f : free_vars) {
    int v = 0;
    while (v + 1 < q.n() && s.var_off[v + 1] <= f) ++v;
    std::size_t local = f - s.var_off[v];
    h.free_slots.push_back({v, local / m.dims[v], local % m.dims[v]});
  }
  for (std::size_t f : free_vars) {
    QVec x(s.d.cols());
    x[f] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = -rr.R(i, f);
    h.basis.push_back(unflatten_map(m, n, s.var_off, x));
  }
  return h;
}

std::vector<RepMap> hom_basis(const Quiver& q, const Rep& m, const Rep& n) { return hom_space(q, m, n).basis; }

int hom_dim(const Quiver& q, const Rep& m, const Rep& n) {
  DeltaSystem s = delta_system(q, m, n);
  return static_cast<int>(s.d.cols() - rank(s.d));
}

QVec ExtSpace::coords(const ExtClass& x) const {
  QVec flat;
  for (const auto& c : x.xi)
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) flat.push_back(c(i, j));
  return proj.apply(flat);
}

ExtClass ExtSpace::combination(const QVec& c) const {
  ExtClass out;
  if (basis.empty()) return out;
  out = basis[0];
  for (auto& m : out.xi) m = QMat(m.rows(), m.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    for (std::size_t a = 0; a < out.xi.size(); ++a) out.xi[a] = out.xi[a] + basis[k].xi[a].scaled(c[k]);
  }
  return out;
}

ExtSpace ext_space(const Quiver& q, const Rep& m, const Rep& n) {
  DeltaSystem s = delta_system(q, m, n);
  ExtSpace e;
  e.offsets = s.cocycle_off;
  const std::size_t nc = s.d.rows();
  QMat ib = s.d.cols() ? image_basis(s.d) : QMat(nc, 0);
  auto comp = complement_indices(ib);
  QMat full = QMat::hcat(ib, QMat::identity(nc).cols_subset(comp));
  QMat inv = nc ? *inverse(full) : QMat(0, 0);
  e.proj = inv.block(ib.cols(), 0, comp.size(), nc);
  for (std::size_t c : comp) {
    ExtClass x;
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
      const auto& a = q.arrows[ai];
      QMat xi(n.dims[a.tgt], m.dims[a.src]);
      std::size_t lo = s.cocycle_off[ai], hi = lo + xi.rows() * xi.cols();
      if (c >= lo && c < hi) xi((c - lo) / xi.cols(), (c - lo) % xi.cols()) = 1;
      x.xi.push_back(xi);
    }
    e.basis.push_back(x);
  }
  return e;
}

std::vector<ExtClass> ext1_basis(const Quiver& q, const Rep& m, const Rep& n) { return ext_space(q, m, n).basis; }

int ext1_dim(const Quiver& q, const Rep& m, const Rep& n) {
  DeltaSystem s = delta_system(q, m, n);
  return static_cast<int>(s.d.rows() - rank(s.d));
}

Extension middle_term(const Quiver& q, const Rep& m, const Rep& n, const ExtClass& xi) {
  Extension ex;
  for (int v = 0; v < q.n(); ++v) ex.e.dims.push_back(n.dims[v] + m.dims[v]);
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    QMat e(ex.e.dims[a.tgt], ex.e.dims[a.src]);
    e.set_block(0, 0, n.mats[ai]);
    e.set_block(0, n.dims[a.src], xi.xi[ai]);
    e.set_block(n.dims[a.tgt], n.dims[a.src], m.mats[ai]);
    ex.e.mats.push_back(e);
  }
  for (int v = 0; v < q.n(); ++v) {
    QMat i(ex.e.dims[v], n.dims[v]);
    i.set_block(0, 0, QMat::identity(n.dims[v]));
    ex.incl.comps.push_back(i);
    QMat p(m.dims[v], ex.e.dims[v]);
    p.set_block(0, n.dims[v], QMat::identity(m.dims[v]));
    ex.proj.comps.push_back(p);
  }
  return ex;
}

Rep subquotient(const Quiver& q, const Rep& x, const std::vector<QMat>& v, const std::vector<QMat>& u) {
  Rep r;
  std::vector<std::vector<std::size_t>> comp(q.n());
  std::vector<QMat> projm(q.n());
  for (int w = 0; w < q.n(); ++w) {
    const std::size_t k = v[w].cols();
    QMat uc(k, 0);
    if (u[w].cols() && k) {
      auto s = solve_mat(v[w], u[w]);
      if (!s) throw DimensionMismatch("subquotient: U is not contained in V");
      uc = *s;
    }
    QMat ib = uc.cols() ? image_basis(uc) : QMat(k, 0);
    comp[w] = complement_indices(ib);
    if (k) {
      QMat inv = *inverse(QMat::hcat(ib, QMat::identity(k).cols_subset(comp[w])));
      projm[w] = inv.block(ib.cols(), 0, comp[w].size(), k);
    } else {
      projm[w] = QMat(0, 0);
    }
    r.dims.push_back(static_cast<int>(comp[w].size()));
  }
  for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
    const auto& a = q.arrows[ai];
    QMat m(r.dims[a.tgt], r.dims[a.src]);
    if (r.dims[a.src] && r.dims[a.tgt]) {
      QMat img = x.mats[ai] * v[a.src].cols_subset(comp[a.src]);
      auto z = solve_mat(v[a.tgt], img);
      if (!z) throw DimensionMismatch("subquotient: V is not a subrepresentation");
      m = projm[a.tgt] * *z;
    }
    r.mats.push_back(m);
  }
  return r;
}

Rep kernel(const Quiver& q, const Rep& m, const Rep&, const RepMap& f) {
  std::vector<QMat> v, u;
  for (int w = 0; w < q.n(); ++w) {
    v.push_back(kernel_basis(f.comps[w]));
    u.emplace_back(m.dims[w], 0);
  }
  return subquotient(q, m, v, u);
}

Rep cokernel(const Quiver& q, const Rep&, const Rep& n, const RepMap& f) {
  std::vector<QMat> v, u;
  for (int w = 0; w < q.n(); ++w) {
    v.push_back(QMat::identity(n.dims[w]));
    u.push_back(f.comps[w].cols() ? image_basis(f.comps[w]) : QMat(n.dims[w], 0));
  }
  return subquotient(q, n, v, u);
}

Rep image(const Quiver& q, const Rep&, const Rep& n, const RepMap& f) {
  std::vector<QMat> v, u;
  for (int w = 0; w < q.n(); ++w) {
    v.push_back(f.comps[w].cols() ? image_basis(f.comps[w]) : QMat(n.dims[w], 0));
    u.emplace_back(n.dims[w], 0);
  }
  return subquotient(q, n, v, u);
}

ProjSum proj_sum(const Quiver& q, const std::vector<int>& verts) {
  ProjSum p;
  p.verts = verts;
  std::vector<Rep> parts;
  std::vector<std::size_t> acc(q.n(), 0);
  for (int v : verts) {
    parts.push_back(projective(q, v));
    p.offset.push_back(acc);
    for (int w = 0; w < q.n(); ++w) acc[w] += parts.back().dims[w];
  }
  p.rep = direct_sum(q, parts);
  return p;
}

RepMap map_from_gens(const Quiver& q, const ProjSum& p, const Rep& x, const std::vector<QVec>& images) {
  RepMap f = zero_map(p.rep, x);
  for (std::size_t k = 0; k < p.verts.size(); ++k) {
    const int v = p.verts[k];
    for (int w = 0; w < q.n(); ++w) {
      auto ps = q.paths(v, w);
      for (std::size_t i = 0; i < ps.size(); ++i) {
        QVec y = path_matrix(q, x, ps[i]).apply(images[k]);
        for (std::size_t r = 0; r < y.size(); ++r) f.comps[w](r, p.offset[k][w] + i) = y[r];
      }
    }
  }
  return f;
}

QVec gen_image(const ProjSum& p, const RepMap& f, std::size_t k) {
  const int v = p.verts[k];
  return f.comps[v].col(p.offset[k][v]);
}

namespace {

// Generators of the top of a representation: complements of the radical at each vertex.
std::vector<std::pair<int, QVec>> top_generators(const Quiver& q, const Rep& m) {
  std::vector<std::pair<int, QVec>> gens;
  for (int v = 0; v < q.n(); ++v) {
    if (m.dims[v] == 0) continue;
    QMat rad(m.dims[v], 0);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
      if (q.arrows[ai].tgt == v) rad = QMat::hcat(rad, m.mats[ai]);
    QMat ib = rad.cols() ? image_basis(rad) : QMat(m.dims[v], 0);
    for (std::size_t c : complement_indices(ib)) {
      QVec e(m.dims[v]);
      e[c] = 1;
      gens.emplace_back(v, e);
    }
  }
  return gens;
}

}  // namespace

ProjResolution proj_resolution(const Quiver& q, const Rep& m) {
  ProjResolution r;
  auto g0 = top_generators(q, m);
  std::vector<int> v0;
  for (auto& g : g0) {
    v0.push_back(g.first);
    r.top_gens.push_back(g.second);
  }
  r.p0 = proj_sum(q, v0);
  r.eps = map_from_gens(q, r.p0, m, r.top_gens);
  std::vector<QMat> kb, zero;
  for (int w = 0; w < q.n(); ++w) {
    kb.push_back(kernel_basis(r.eps.comps[w]));
    zero.emplace_back(r.p0.rep.dims[w], 0);
  }
  Rep k = subquotient(q, r.p0.rep, kb, zero);
  auto g1 = top_generators(q, k);
  std::vector<int> v1;
  std::vector<QVec> imgs;
  for (auto& g : g1) {
    v1.push_back(g.first);
    imgs.push_back(kb[g.first].apply(g.second));
  }
  r.p1 = proj_sum(q, v1);
  r.d = map_from_gens(q, r.p1, r.p0.rep, imgs);
  for (int w = 0; w < q.n(); ++w)
    if (static_cast<int>(rank(r.d.comps[w])) != r.p1.rep.dims[w] || r.p1.rep.dims[w] != k.dims[w])
      throw AlgebraError("projective resolution: kernel of the cover is not projective");
  return r;
}

namespace {

struct InjSum {
  std::vector<int> verts;
  Rep rep;
  std::vector<std::vector<std::size_t>> offset;
};

InjSum inj_sum(const Quiver& q, const std::vector<int>& verts) {
  InjSum s;
  s.verts = verts;
  std::vector<Rep> parts;
  std::vector<std::size_t> acc(q.n(), 0);
  for (int v : verts) {
    parts.push_back(injective(q, v));
    s.offset.push_back(acc);
    for (int w = 0; w < q.n(); ++w) acc[w] += parts.back().dims[w];
  }
  s.rep = direct_sum(q, parts);
  return s;
}

}  // namespace

Rep tau(const Quiver& q, const Rep& m) {
  ProjResolution r = proj_resolution(q, m);
  InjSum i1 = inj_sum(q, r.p1.verts), i0 = inj_sum(q, r.p0.verts);
  RepMap nu = zero_map(i1.rep, i0.rep);
  for (std::size_t k1 = 0; k1 < r.p1.verts.size(); ++k1) {
    const int v = r.p1.verts[k1];
    QVec x = gen_image(r.p1, r.d, k1);
    for (std::size_t k0 = 0; k0 < r.p0.verts.size(); ++k0) {
      const int w = r.p0.verts[k0];
      auto pw = q.paths(w, v);
      for (std::size_t pi = 0; pi < pw.size(); ++pi) {
        const Q& c = x[r.p0.offset[k0][v] + pi];
        if (sgn(c) == 0) continue;
        // I_v -> I_w induced by the path p : w ~> v, at every vertex u.
        for (int u = 0; u < q.n(); ++u) {
          auto rows = q.paths(u, w), cols = q.paths(u, v);
          for (std::size_t qi = 0; qi < rows.size(); ++qi) {
            auto cat = rows[qi].arrows;
            cat.insert(cat.end(), pw[pi].arrows.begin(), pw[pi].arrows.end());
            for (std::size_t ci = 0; ci < cols.size(); ++ci)
              if (cols[ci].arrows == cat) nu.comps[u](i0.offset[k0][u] + qi, i1.offset[k1][u] + ci) += c;
          }
        }
      }
    }
  }
  return kernel(q, i1.rep, i0.rep, nu);
}

Rep tau_inv(const Quiver& q, const Rep& m) {
  Quiver op = q.opposite();
  Rep t = tau(op, dual_rep(q, m));
  return dual_rep(op, t);
}

bool is_iso(const Quiver& q, const Rep& m, const Rep& n, std::mt19937_64& rng) {
  if (m.dims != n.dims) return false;
  auto hb = hom_basis(q, m, n);
  if (hb.empty()) return m.is_zero();
  auto invertible = [&](const RepMap& f) {
    for (std::size_t v = 0; v < f.comps.size(); ++v)
      if (rank(f.comps[v]) != static_cast<std::size_t>(m.dims[v])) return false;
    return true;
  };
  for (const auto& f : hb)
    if (invertible(f)) return true;
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int t = 0; t < 8; ++t) {
    RepMap f = scale(hb[0], dist(rng));
    for (std::size_t k = 1; k < hb.size(); ++k) f = add(f, scale(hb[k], dist(rng)));
    if (invertible(f)) return true;
  }
  return false;
}

int euler_form(const Quiver& q, const std::vector<int>& dm, const std::vector<int>& dn) {
  int s = 0;
  for (int v = 0; v < q.n(); ++v) s += dm[v] * dn[v];
  for (const auto& a : q.arrows) s -= dm[a.src] * dn[a.tgt];
  return s;
}

}  // namespace dx
