#include "dx/window.hpp"

#include <algorithm>
#include <sstream>

namespace dx {

WObj WObj::of(std::vector<Summand> parts) {
  std::sort(parts.begin(), parts.end());
  return WObj{std::move(parts)};
}

std::map<Summand, int> WObj::counts() const {
  std::map<Summand, int> c;
  for (const auto& x : s) ++c[x];
  return c;
}

WObj shifted(const WObj& x, int k) {
  WObj y = x;
  for (auto& s : y.s) s.shift += k;
  return y;
}

WObj direct_sum(const WObj& a, const WObj& b) {
  auto v = a.s;
  v.insert(v.end(), b.s.begin(), b.s.end());
  return WObj::of(v);
}

WObj power(const Summand& s, int m) { return WObj{std::vector<Summand>(std::max(m, 0), s)}; }

int min_shift(const WObj& x) { return x.s.empty() ? 0 : x.s.front().shift; }
int max_shift(const WObj& x) { return x.s.empty() ? 0 : x.s.back().shift; }

int block_dim(const IndTable& t, const Summand& from, const Summand& to) {
  const int e = to.shift - from.shift;
  if (e == 0) return t.G[from.ind][to.ind];
  if (e == 1) return t.E[from.ind][to.ind];
  return 0;
}

int hom_dim(const IndTable& t, const WObj& x, const WObj& y, int k) {
  int s = 0;
  for (const auto& a : x.s)
    for (const auto& b : y.s) s += block_dim(t, a, {b.ind, b.shift + k});
  return s;
}

WMor zero_mor(const IndTable& t, const WObj& x, const WObj& y) {
  WMor f{x, y, {}};
  f.blocks.assign(y.size(), std::vector<QVec>(x.size()));
  for (std::size_t u = 0; u < y.size(); ++u)
    for (std::size_t s = 0; s < x.size(); ++s) f.blocks[u][s].assign(block_dim(t, x.s[s], y.s[u]), Q(0));
  return f;
}

WMor identity_mor(const IndTable& t, const WObj& x) {
  WMor f = zero_mor(t, x, x);
  for (std::size_t s = 0; s < x.size(); ++s) f.blocks[s][s][0] = 1;
  return f;
}

QVec flatten(const WMor& f) {
  QVec v;
  for (std::size_t s = 0; s < f.src.size(); ++s)
    for (std::size_t u = 0; u < f.tgt.size(); ++u) v.insert(v.end(), f.blocks[u][s].begin(), f.blocks[u][s].end());
  return v;
}

WMor unflatten(const IndTable& t, const WObj& x, const WObj& y, const QVec& v) {
  WMor f = zero_mor(t, x, y);
  std::size_t p = 0;
  for (std::size_t s = 0; s < x.size(); ++s)
    for (std::size_t u = 0; u < y.size(); ++u)
      for (auto& c : f.blocks[u][s]) c = v.at(p++);
  if (p != v.size()) throw DimensionMismatch("unflatten: coordinate vector has the wrong length");
  return f;
}

std::vector<WMor> hom_basis_w(const IndTable& t, const WObj& x, const WObj& y, int k) {
  WObj yk = shifted(y, k);
  const int n = hom_dim(t, x, yk, 0);
  std::vector<WMor> out;
  for (int i = 0; i < n; ++i) {
    QVec v(n, Q(0));
    v[i] = 1;
    out.push_back(unflatten(t, x, yk, v));
  }
  return out;
}

namespace {

// r = sum_{i,j} T(:, i*n1 + j) g_i f_j
void contract(const QMat& tensor, const QVec& g, const QVec& f, QVec& r) {
  const std::size_t n1 = f.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (sgn(g[i]) == 0) continue;
    for (std::size_t j = 0; j < n1; ++j) {
      if (sgn(f[j]) == 0) continue;
      Q c = g[i] * f[j];
      for (std::size_t row = 0; row < r.size(); ++row) r[row] += tensor(row, i * n1 + j) * c;
    }
  }
}

bool nonzero(const QVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return true;
  return false;
}

}  // namespace

WMor compose(const IndTable& t, const WMor& g, const WMor& f) {
  if (!(f.tgt == g.src)) throw DimensionMismatch("compose: target and source differ");
  WMor h = zero_mor(t, f.src, g.tgt);
  for (std::size_t s = 0; s < f.src.size(); ++s) {
    const Summand& a = f.src.s[s];
    for (std::size_t u = 0; u < g.tgt.size(); ++u) {
      const Summand& c = g.tgt.s[u];
      QVec& r = h.blocks[u][s];
      if (r.empty()) continue;
      for (std::size_t m = 0; m < f.tgt.size(); ++m) {
        const Summand& b = f.tgt.s[m];
        const QVec &fv = f.blocks[m][s], &gv = g.blocks[u][m];
        if (fv.empty() || gv.empty() || !nonzero(fv) || !nonzero(gv)) continue;
        const int e1 = b.shift - a.shift, e2 = c.shift - b.shift;
        if (e1 == 0 && e2 == 0)
          contract(t.hh(a.ind, b.ind, c.ind), gv, fv, r);
        else if (e1 == 0 && e2 == 1)
          contract(t.eh(a.ind, b.ind, c.ind), gv, fv, r);
        else if (e1 == 1 && e2 == 0)
          contract(t.he(a.ind, b.ind, c.ind), gv, fv, r);
      }
    }
  }
  return h;
}

WMor add(const WMor& a, const WMor& b) {
  if (!(a.src == b.src) || !(a.tgt == b.tgt)) throw DimensionMismatch("add: morphisms between different objects");
  WMor h = a;
  for (std::size_t u = 0; u < h.blocks.size(); ++u)
    for (std::size_t s = 0; s < h.blocks[u].size(); ++s)
      for (std::size_t k = 0; k < h.blocks[u][s].size(); ++k) h.blocks[u][s][k] += b.blocks[u][s][k];
  return h;
}

WMor scale(const WMor& a, const Q& c) {
  WMor h = a;
  for (auto& row : h.blocks)
    for (auto& b : row)
      for (auto& x : b) x *= c;
  return h;
}

bool is_zero(const WMor& f) {
  for (const auto& row : f.blocks)
    for (const auto& b : row)
      if (nonzero(b)) return false;
  return true;
}

WMor random_mor(const IndTable& t, const WObj& x, const WObj& y, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  WMor f = zero_mor(t, x, y);
  for (auto& row : f.blocks)
    for (auto& b : row)
      for (auto& c : b) c = dist(rng);
  return f;
}

namespace {

// Map from the sum of the listed summands to z; cols[i] are flattened
// coordinates of the component from summand i.
WMor map_into(const IndTable& t, std::vector<std::pair<Summand, QVec>> cols, const WObj& z) {
  std::stable_sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Summand> src;
  for (const auto& c : cols) src.push_back(c.first);
  WObj x{src};
  WMor f = zero_mor(t, x, z);
  for (std::size_t s = 0; s < cols.size(); ++s) {
    std::size_t p = 0;
    for (std::size_t u = 0; u < z.size(); ++u)
      for (auto& c : f.blocks[u][s]) c = cols[s].second.at(p++);
  }
  return f;
}

// Map from z to the sum of the listed summands; rows[i] are flattened
// coordinates of the component into summand i.
WMor map_from(const IndTable& t, const WObj& z, std::vector<std::pair<Summand, QVec>> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Summand> tgt;
  for (const auto& r : rows) tgt.push_back(r.first);
  WObj y{tgt};
  WMor f = zero_mor(t, z, y);
  for (std::size_t u = 0; u < rows.size(); ++u) {
    std::size_t p = 0;
    for (std::size_t s = 0; s < z.size(); ++s)
      for (auto& c : f.blocks[u][s]) c = rows[u].second.at(p++);
  }
  return f;
}

QVec unit(std::size_t n, std::size_t i) {
  QVec v(n, Q(0));
  v[i] = 1;
  return v;
}

}  // namespace

WMor universal_into(const IndTable& t, const std::vector<Summand>& from, const WObj& z) {
  std::vector<std::pair<Summand, QVec>> cols;
  for (const auto& s : from) {
    const int n = hom_dim(t, WObj::one(s.ind, s.shift), z);
    for (int i = 0; i < n; ++i) cols.emplace_back(s, unit(n, i));
  }
  return map_into(t, cols, z);
}

WMor universal_from(const IndTable& t, const WObj& z, const std::vector<Summand>& to) {
  std::vector<std::pair<Summand, QVec>> rows;
  for (const auto& s : to) {
    const int n = hom_dim(t, z, WObj::one(s.ind, s.shift));
    for (int i = 0; i < n; ++i) rows.emplace_back(s, unit(n, i));
  }
  return map_from(t, z, rows);
}

namespace {

// A bounded complex of projectives: the shifted minimal resolutions of the
// summands of a WObj, laid out degree by degree.
struct Layout {
  int lo = 0;
  std::vector<std::vector<int>> verts;
  std::vector<ProjSum> ps;
  std::vector<std::size_t> g0, g1;  // first generator of each summand's P0 / P1 block
  std::vector<std::vector<QVec>> dimg;

  bool has(int deg) const { return deg >= lo && deg < lo + static_cast<int>(verts.size()); }
  const ProjSum& at(int deg) const { return ps[deg - lo]; }
  int dim_at(int deg, int v) const { return has(deg) ? at(deg).rep.dims[v] : 0; }
  std::size_t gens_at(int deg) const { return has(deg) ? verts[deg - lo].size() : 0; }
};

QVec embed(const ProjSum& ps, std::size_t gfirst, int v, const QVec& local) {
  QVec out(ps.rep.dims[v], Q(0));
  const std::size_t o = ps.offset[gfirst][v];
  for (std::size_t i = 0; i < local.size(); ++i) out[o + i] = local[i];
  return out;
}

Layout make_layout(const IndTable& t, const WObj& x, int lo, int nd) {
  const Quiver& q = t.quiver;
  Layout l;
  l.lo = lo;
  l.verts.assign(nd, {});
  for (const auto& s : x.s) {
    const auto& r = t.res[s.ind];
    auto& v1 = l.verts[-s.shift - 1 - lo];
    l.g1.push_back(v1.size());
    v1.insert(v1.end(), r.p1.verts.begin(), r.p1.verts.end());
    auto& v0 = l.verts[-s.shift - lo];
    l.g0.push_back(v0.size());
    v0.insert(v0.end(), r.p0.verts.begin(), r.p0.verts.end());
  }
  for (int i = 0; i < nd; ++i) l.ps.push_back(proj_sum(q, l.verts[i]));
  l.dimg.assign(nd, {});
  for (int i = 0; i < nd; ++i)
    for (int v : l.verts[i]) l.dimg[i].push_back(QVec(l.dim_at(lo + i + 1, v), Q(0)));
  for (std::size_t u = 0; u < x.size(); ++u) {
    const auto& s = x.s[u];
    const auto& r = t.res[s.ind];
    const int d1 = -s.shift - 1, d0 = -s.shift;
    for (std::size_t k = 0; k < r.p1.verts.size(); ++k) {
      const int v = r.p1.verts[k];
      l.dimg[d1 - lo][l.g1[u] + k] = embed(l.at(d0), l.g0[u], v, gen_image(r.p1, r.d, k));
    }
  }
  return l;
}

void add_into(QVec& acc, const QVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
}

}  // namespace

WObj cone(const IndTable& t, const WMor& f) {
  const Quiver& q = t.quiver;
  const WObj &x = f.src, &y = f.tgt;
  if (x.empty()) return y;
  const int smin = std::min(x.empty() ? y.s.front().shift : x.s.front().shift, y.empty() ? x.s.front().shift : y.s.front().shift);
  const int smax = std::max(x.empty() ? y.s.back().shift : x.s.back().shift, y.empty() ? x.s.back().shift : y.s.back().shift);
  const int lo = -smax - 2, hi = -smin + 1, nd = hi - lo + 1;
  Layout lx = make_layout(t, x, lo, nd), ly = make_layout(t, y, lo, nd);

  // Chain map F: X -> Y, as images of the X generators.
  std::vector<std::vector<QVec>> fimg(nd);
  for (int i = 0; i < nd; ++i)
    for (int v : lx.verts[i]) fimg[i].push_back(QVec(ly.dim_at(lo + i, v), Q(0)));
  for (std::size_t s = 0; s < x.size(); ++s) {
    const Summand& a = x.s[s];
    const auto& ra = t.res[a.ind];
    for (std::size_t u = 0; u < y.size(); ++u) {
      const Summand& b = y.s[u];
      const QVec& c = f.blocks[u][s];
      if (c.empty() || !nonzero(c)) continue;
      if (b.shift == a.shift) {
        const HomLift& hl = t.hom_lift(a.ind, b.ind);
        const int d0 = -a.shift, d1 = d0 - 1;
        for (std::size_t k = 0; k < ra.p0.verts.size(); ++k) {
          const int v = ra.p0.verts[k];
          QVec loc(hl.g0[0][k].size(), Q(0));
          for (std::size_t m = 0; m < c.size(); ++m)
            for (std::size_t i = 0; i < loc.size(); ++i) loc[i] += c[m] * hl.g0[m][k][i];
          if (!loc.empty()) add_into(fimg[d0 - lo][lx.g0[s] + k], embed(ly.at(d0), ly.g0[u], v, loc));
        }
        for (std::size_t k = 0; k < ra.p1.verts.size(); ++k) {
          const int v = ra.p1.verts[k];
          QVec loc(hl.g1[0][k].size(), Q(0));
          for (std::size_t m = 0; m < c.size(); ++m)
            for (std::size_t i = 0; i < loc.size(); ++i) loc[i] += c[m] * hl.g1[m][k][i];
          if (!loc.empty()) add_into(fimg[d1 - lo][lx.g1[s] + k], embed(ly.at(d1), ly.g1[u], v, loc));
        }
      } else if (b.shift == a.shift + 1) {
        const ExtLift& el = t.ext_lift(a.ind, b.ind);
        const int d1 = -a.shift - 1;
        for (std::size_t k = 0; k < ra.p1.verts.size(); ++k) {
          const int v = ra.p1.verts[k];
          QVec loc(el.g[0][k].size(), Q(0));
          for (std::size_t m = 0; m < c.size(); ++m)
            for (std::size_t i = 0; i < loc.size(); ++i) loc[i] += c[m] * el.g[m][k][i];
          if (!loc.empty()) add_into(fimg[d1 - lo][lx.g1[s] + k], embed(ly.at(d1), ly.g0[u], v, loc));
        }
      }
    }
  }

  // Cone^i = X^{i+1} + Y^i, d = [[-d_X, 0], [F, d_Y]].
  std::vector<ProjSum> cps;
  std::vector<std::size_t> nx(nd);
  for (int i = lo; i <= hi; ++i) {
    std::vector<int> verts;
    if (lx.has(i + 1)) verts = lx.verts[i + 1 - lo];
    nx[i - lo] = verts.size();
    verts.insert(verts.end(), ly.verts[i - lo].begin(), ly.verts[i - lo].end());
    cps.push_back(proj_sum(q, verts));
  }
  std::vector<RepMap> cd;
  for (int i = lo; i < hi; ++i) {
    const ProjSum& src = cps[i - lo];
    std::vector<QVec> imgs;
    for (std::size_t g = 0; g < src.verts.size(); ++g) {
      const int v = src.verts[g];
      QVec img;
      if (g < nx[i - lo]) {
        const QVec& dx = lx.dimg[i + 1 - lo][g];
        for (const auto& e : dx) img.push_back(-e);
        const QVec& fy = fimg[i + 1 - lo][g];
        img.insert(img.end(), fy.begin(), fy.end());
      } else {
        img.assign(lx.dim_at(i + 2, v), Q(0));
        const QVec& dy = ly.dimg[i - lo][g - nx[i - lo]];
        img.insert(img.end(), dy.begin(), dy.end());
      }
      imgs.push_back(std::move(img));
    }
    cd.push_back(map_from_gens(q, src, cps[i + 1 - lo].rep, imgs));
  }

  std::vector<Summand> out;
  for (int i = lo; i <= hi; ++i) {
    const Rep& c = cps[i - lo].rep;
    if (c.is_zero()) continue;
    std::vector<QMat> v, u;
    for (int w = 0; w < q.n(); ++w) {
      v.push_back(i < hi ? kernel_basis(cd[i - lo].comps[w]) : QMat::identity(c.dims[w]));
      if (i > lo && cd[i - 1 - lo].comps[w].cols())
        u.push_back(image_basis(cd[i - 1 - lo].comps[w]));
      else
        u.emplace_back(c.dims[w], 0);
    }
    Rep h = subquotient(q, c, v, u);
    if (h.is_zero()) continue;
    auto m = decompose_module(t, h);
    for (int a = 0; a < t.size(); ++a)
      for (int k = 0; k < m[a]; ++k) out.push_back({a, -i});
  }
  return WObj::of(out);
}

WObj cocone(const IndTable& t, const WMor& f) { return shifted(cone(t, f), -1); }

WObj trunc_ge(const WObj& x, int m) {
  std::vector<Summand> out;
  for (const auto& s : x.s)
    if (-s.shift >= m) out.push_back(s);
  return WObj{out};
}

WObj trunc_le(const WObj& x, int n) {
  std::vector<Summand> out;
  for (const auto& s : x.s)
    if (-s.shift <= n) out.push_back(s);
  return WObj{out};
}

namespace {

QMat columns(const std::vector<QVec>& vs, std::size_t n) {
  QMat m(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
  return m;
}

}  // namespace

Approx min_left_approx(const IndTable& t, const WObj& z, const std::vector<Summand>& a) {
  std::vector<std::pair<Summand, QVec>> rows;
  for (std::size_t k = 0; k < a.size(); ++k) {
    WObj ak = WObj::one(a[k].ind, a[k].shift);
    const int n = hom_dim(t, z, ak);
    if (!n) continue;
    std::vector<QVec> rad;
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (l == k) continue;
      WObj al = WObj::one(a[l].ind, a[l].shift);
      auto hs = hom_basis_w(t, al, ak);
      if (hs.empty()) continue;
      for (const auto& g : hom_basis_w(t, z, al))
        for (const auto& h : hs) rad.push_back(flatten(compose(t, h, g)));
    }
    QMat r = columns(rad, n);
    for (std::size_t i : complement_indices(rad.empty() ? QMat(n, 0) : image_basis(r))) rows.emplace_back(a[k], unit(n, i));
  }
  Approx out;
  out.map = map_from(t, z, rows);
  out.obj = out.map.tgt;
  for (const auto& s : a) {
    WObj as = WObj::one(s.ind, s.shift);
    const int n = hom_dim(t, z, as);
    if (!n) continue;
    std::vector<QVec> span;
    for (const auto& h : hom_basis_w(t, out.obj, as)) span.push_back(flatten(compose(t, h, out.map)));
    if (static_cast<int>(rank(columns(span, n))) != n) throw AlgebraError("left approximation is not surjective on Hom");
  }
  return out;
}

Approx min_right_approx(const IndTable& t, const WObj& z, const std::vector<Summand>& a) {
  std::vector<std::pair<Summand, QVec>> cols;
  for (std::size_t k = 0; k < a.size(); ++k) {
    WObj ak = WObj::one(a[k].ind, a[k].shift);
    const int n = hom_dim(t, ak, z);
    if (!n) continue;
    std::vector<QVec> rad;
    for (std::size_t l = 0; l < a.size(); ++l) {
      if (l == k) continue;
      WObj al = WObj::one(a[l].ind, a[l].shift);
      auto hs = hom_basis_w(t, ak, al);
      if (hs.empty()) continue;
      for (const auto& g : hom_basis_w(t, al, z))
        for (const auto& h : hs) rad.push_back(flatten(compose(t, g, h)));
    }
    QMat r = columns(rad, n);
    for (std::size_t i : complement_indices(rad.empty() ? QMat(n, 0) : image_basis(r))) cols.emplace_back(a[k], unit(n, i));
  }
  Approx out;
  out.map = map_into(t, cols, z);
  out.obj = out.map.src;
  for (const auto& s : a) {
    WObj as = WObj::one(s.ind, s.shift);
    const int n = hom_dim(t, as, z);
    if (!n) continue;
    std::vector<QVec> span;
    for (const auto& h : hom_basis_w(t, as, out.obj)) span.push_back(flatten(compose(t, out.map, h)));
    if (static_cast<int>(rank(columns(span, n))) != n) throw AlgebraError("right approximation is not surjective on Hom");
  }
  return out;
}

std::vector<Summand> window_objects(const IndTable& t, int lo, int hi) {
  std::vector<Summand> out;
  for (int j = lo; j <= hi; ++j)
    for (int a = 0; a < t.size(); ++a) out.push_back({a, j});
  return out;
}

bool in_range(const WObj& x, int lo, int hi) {
  for (const auto& s : x.s)
    if (s.shift < lo || s.shift > hi) return false;
  return true;
}

bool all_in(const WObj& x, const Subcat& s) {
  for (const auto& y : x.s)
    if (!s.count(y)) return false;
  return true;
}

std::string summand_name(const IndTable& t, const Summand& s) {
  std::string n = t.names.at(s.ind);
  if (s.shift != 0) n += "@" + std::to_string(s.shift);
  return n;
}

std::string wobj_str(const IndTable& t, const WObj& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [s, m] : x.counts()) {
    if (!out.empty()) out += ",";
    out += summand_name(t, s);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

std::string subcat_str(const IndTable& t, const Subcat& s) {
  std::string out = "{";
  for (const auto& x : s) {
    if (out.size() > 1) out += ", ";
    out += summand_name(t, x);
  }
  return out + "}";
}

WObj parse_wobj(const IndTable& t, const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      toks.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  toks.push_back(cur);
  std::vector<Summand> out;
  if (toks.size() == 1 && (toks[0].empty() || toks[0] == "0")) return {};
  for (const auto& tok : toks) {
    if (tok.empty()) throw ParseError("empty object token in '" + text + "'");
    std::string name = tok;
    int shift = 0, mult = 1;
    auto caret = name.find('^');
    try {
      if (caret != std::string::npos) {
        mult = std::stoi(name.substr(caret + 1));
        name = name.substr(0, caret);
      }
      auto at = name.find('@');
      if (at != std::string::npos) {
        std::size_t used = 0;
        shift = std::stoi(name.substr(at + 1), &used);
        if (used != name.size() - at - 1) throw ParseError("");
        name = name.substr(0, at);
      }
    } catch (const std::exception&) {
      throw ParseError("malformed object token '" + tok + "'");
    }
    int a = t.find(name);
    if (a < 0) throw ParseError("unknown indecomposable '" + name + "'");
    if (mult < 1) throw ParseError("multiplicity must be positive in '" + tok + "'");
    for (int k = 0; k < mult; ++k) out.push_back({a, shift});
  }
  return WObj::of(out);
}

}  // namespace dx
