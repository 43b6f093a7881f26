#include "dx/indtable.hpp"

#include <deque>
#include <functional>
#include <queue>
#include <sstream>

namespace dx {

int IndTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  // M[d1,...,dn] names a module by its dimension vector (unique in Dynkin type)
  if (name.size() > 3 && name.compare(0, 2, "M[") == 0 && name.back() == ']') {
    std::vector<int> dims;
    std::stringstream in(name.substr(2, name.size() - 3));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return -1;
      dims.push_back(std::stoi(tok));
    }
    for (std::size_t i = 0; i < inds.size(); ++i)
      if (inds[i].dims == dims) return static_cast<int>(i);
  }
  return -1;
}

int IndTable::projective_index(int v) const {
  for (int i = 0; i < size(); ++i)
    if (proj_vertex[i] == v) return i;
  return -1;
}

namespace {

QMat tensor_from(std::size_t rows, std::size_t n2, std::size_t n1,
                 const std::function<QVec(std::size_t, std::size_t)>& value) {
  QMat t(rows, n2 * n1);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      QVec c = value(i, j);
      for (std::size_t r = 0; r < rows; ++r) t(r, i * n1 + j) = c[r];
    }
  return t;
}

}  // namespace

const QMat& IndTable::hh(int a, int b, int c) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_tuple(0, a, b, c);
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return *it->second;
  const auto &f = hom[a][b].basis, &g = hom[b][c].basis;
  auto t = std::make_unique<QMat>(tensor_from(hom[a][c].basis.size(), g.size(), f.size(), [&](std::size_t i, std::size_t j) {
    return hom[a][c].coords(compose(g[i], f[j]));
  }));
  return *(tensors_[key] = std::move(t));
}

const QMat& IndTable::eh(int a, int b, int c) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_tuple(1, a, b, c);
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return *it->second;
  const auto& f = hom[a][b].basis;
  const auto& x = ext[b][c].basis;
  auto t = std::make_unique<QMat>(tensor_from(ext[a][c].basis.size(), x.size(), f.size(), [&](std::size_t i, std::size_t j) {
    ExtClass y;
    for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai)
      y.xi.push_back(x[i].xi[ai] * f[j].comps[quiver.arrows[ai].src]);
    return ext[a][c].coords(y);
  }));
  return *(tensors_[key] = std::move(t));
}

const QMat& IndTable::he(int a, int b, int c) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_tuple(2, a, b, c);
  auto it = tensors_.find(key);
  if (it != tensors_.end()) return *it->second;
  const auto& g = hom[b][c].basis;
  const auto& x = ext[a][b].basis;
  auto t = std::make_unique<QMat>(tensor_from(ext[a][c].basis.size(), g.size(), x.size(), [&](std::size_t i, std::size_t j) {
    ExtClass y;
    for (std::size_t ai = 0; ai < quiver.arrows.size(); ++ai)
      y.xi.push_back(g[i].comps[quiver.arrows[ai].tgt] * x[j].xi[ai]);
    return ext[a][c].coords(y);
  }));
  return *(tensors_[key] = std::move(t));
}

const HomLift& IndTable::hom_lift(int a, int b) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_pair(a, b);
  auto it = hom_lifts_.find(key);
  if (it != hom_lifts_.end()) return *it->second;
  const auto &rm = res[a], &rn = res[b];
  auto out = std::make_unique<HomLift>();
  for (const auto& phi : hom[a][b].basis) {
    std::vector<QVec> g0, g1;
    for (std::size_t k = 0; k < rm.p0.verts.size(); ++k) {
      const int v = rm.p0.verts[k];
      auto x = solve(rn.eps.comps[v], phi.comps[v].apply(rm.top_gens[k]));
      if (!x) throw AlgebraError("hom lift: cover is not surjective");
      g0.push_back(*x);
    }
    RepMap phi0 = map_from_gens(quiver, rm.p0, rn.p0.rep, g0);
    for (std::size_t k = 0; k < rm.p1.verts.size(); ++k) {
      const int v = rm.p1.verts[k];
      auto u = solve(rn.d.comps[v], phi0.comps[v].apply(gen_image(rm.p1, rm.d, k)));
      if (!u) throw AlgebraError("hom lift: relation does not lift");
      g1.push_back(*u);
    }
    out->g0.push_back(std::move(g0));
    out->g1.push_back(std::move(g1));
  }
  return *(hom_lifts_[key] = std::move(out));
}

const ExtLift& IndTable::ext_lift(int a, int b) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto key = std::make_pair(a, b);
  auto it = ext_lifts_.find(key);
  if (it != ext_lifts_.end()) return *it->second;
  const auto &rm = res[a], &rn = res[b];
  const Rep &m = inds[a], &n = inds[b];
  auto out = std::make_unique<ExtLift>();
  for (const auto& xi : ext[a][b].basis) {
    Extension ex = middle_term(quiver, m, n, xi);
    std::vector<QVec> lifts;
    for (std::size_t k = 0; k < rm.p0.verts.size(); ++k) {
      const int v = rm.p0.verts[k];
      QVec e(n.dims[v], Q(0));
      e.insert(e.end(), rm.top_gens[k].begin(), rm.top_gens[k].end());
      lifts.push_back(e);
    }
    RepMap lift0 = map_from_gens(quiver, rm.p0, ex.e, lifts);
    std::vector<QVec> g;
    for (std::size_t k = 0; k < rm.p1.verts.size(); ++k) {
      const int v = rm.p1.verts[k];
      QVec e = lift0.comps[v].apply(gen_image(rm.p1, rm.d, k));
      for (int i = n.dims[v]; i < static_cast<int>(e.size()); ++i)
        if (sgn(e[i]) != 0) throw AlgebraError("ext lift: relation leaves the submodule");
      e.resize(n.dims[v]);
      auto x = solve(rn.eps.comps[v], e);
      if (!x) throw AlgebraError("ext lift: cover is not surjective");
      g.push_back(*x);
    }
    out->g.push_back(std::move(g));
  }
  return *(ext_lifts_[key] = std::move(out));
}

std::shared_ptr<const IndTable> knit_indecomposables(const Quiver& q, const KnitOptions& opt) {
  if (opt.cap <= 0) throw std::invalid_argument("knit cap must be positive");
  if (!opt.experimental && !tits_form_positive_definite(q))
    throw ScopeError("representation-infinite: the Tits form of '" + q.name + "' is not positive definite");
  std::mt19937_64 rng(opt.seed);
  auto t = std::make_shared<IndTable>();
  t->quiver = q;

  std::vector<Rep> found;
  std::deque<Rep> queue;
  for (int v = 0; v < q.n(); ++v) queue.push_back(projective(q, v));
  while (!queue.empty()) {
    Rep r = std::move(queue.front());
    queue.pop_front();
    bool dup = false;
    for (const auto& f : found)
      if (is_iso(q, f, r, rng)) {
        dup = true;
        break;
      }
    if (dup) continue;
    if (static_cast<int>(found.size()) >= opt.cap) {
      if (!opt.experimental) throw ScopeError("representation-infinite or cap exceeded (cap " + std::to_string(opt.cap) + ")");
      t->partial = true;
      break;
    }
    found.push_back(r);
    Rep next = tau_inv(q, r);
    if (!next.is_zero()) queue.push_back(std::move(next));
  }

  const int n = static_cast<int>(found.size());
  std::vector<std::vector<int>> g0(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g0[a][b] = hom_dim(q, found[a], found[b]);

  // Kahn's algorithm on a -> b when Hom(a,b) != 0, smallest knitting index first.
  std::vector<int> indeg(n, 0), order;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && g0[a][b]) ++indeg[b];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int a = 0; a < n; ++a)
    if (!indeg[a]) ready.push(a);
  while (!ready.empty()) {
    int a = ready.top();
    ready.pop();
    order.push_back(a);
    for (int b = 0; b < n; ++b)
      if (a != b && g0[a][b] && --indeg[b] == 0) ready.push(b);
  }
  if (static_cast<int>(order.size()) != n) throw AlgebraError("no unitriangular order: Hom relation has a cycle");

  for (int a : order) t->inds.push_back(found[a]);
  t->G.assign(n, std::vector<int>(n));
  t->E.assign(n, std::vector<int>(n));
  t->hom.assign(n, std::vector<HomSpace>(n));
  t->ext.assign(n, std::vector<ExtSpace>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rep &m = t->inds[a], &x = t->inds[b];
      t->hom[a][b] = hom_space(q, m, x);
      t->ext[a][b] = ext_space(q, m, x);
      t->G[a][b] = static_cast<int>(t->hom[a][b].basis.size());
      t->E[a][b] = static_cast<int>(t->ext[a][b].basis.size());
      if (t->G[a][b] - t->E[a][b] != euler_form(q, m.dims, x.dims))
        throw AlgebraError("Euler form identity fails");
    }
  for (int a = 0; a < n; ++a) {
    if (t->G[a][a] != 1) throw ScopeError("indecomposable with endomorphism ring of dimension " + std::to_string(t->G[a][a]));
    if (t->E[a][a] != 0) throw ScopeError("indecomposable with self-extensions");
    t->res.push_back(proj_resolution(q, t->inds[a]));
  }

  auto match = [&](const Rep& r) {
    for (int i = 0; i < n; ++i)
      if (is_iso(q, t->inds[i], r, rng)) return i;
    return -1;
  };
  t->proj_vertex.assign(n, -1);
  t->inj_vertex.assign(n, -1);
  t->simple_vertex.assign(n, -1);
  for (int v = 0; v < q.n(); ++v) {
    int i = match(projective(q, v));
    if (i >= 0) t->proj_vertex[i] = v;
    i = match(injective(q, v));
    if (i >= 0) t->inj_vertex[i] = v;
    i = match(simple(q, v));
    if (i >= 0) t->simple_vertex[i] = v;
  }
  t->tau_idx.assign(n, -1);
  t->tau_inv_idx.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (t->proj_vertex[a] < 0) t->tau_idx[a] = match(tau(q, t->inds[a]));
    if (t->inj_vertex[a] < 0) t->tau_inv_idx[a] = match(tau_inv(q, t->inds[a]));
  }

  for (int a = 0; a < n; ++a) {
    std::string name;
    if (t->proj_vertex[a] >= 0)
      name = "P" + q.vertices[t->proj_vertex[a]];
    else if (t->inj_vertex[a] >= 0)
      name = "I" + q.vertices[t->inj_vertex[a]];
    else if (t->simple_vertex[a] >= 0)
      name = "S" + q.vertices[t->simple_vertex[a]];
    else {
      name = "M[";
      for (int v = 0; v < q.n(); ++v) name += (v ? "," : "") + std::to_string(t->inds[a].dims[v]);
      name += "]";
    }
    if (t->find(name) >= 0) name += "#" + std::to_string(a);
    t->names.push_back(name);
  }
  return t;
}

std::vector<int> decompose_module(const IndTable& t, const Rep& x) {
  const int n = t.size();
  std::vector<int> h(n), m(n, 0);
  for (int a = 0; a < n; ++a) h[a] = hom_dim(t.quiver, t.inds[a], x);
  for (int a = n - 1; a >= 0; --a) {
    int s = h[a];
    for (int b = a + 1; b < n; ++b) s -= m[b] * t.G[a][b];
    if (s < 0) throw AlgebraError("decomposition has no nonnegative solution");
    m[a] = s;
  }
  std::vector<int> dims(t.quiver.n(), 0);
  for (int a = 0; a < n; ++a)
    for (int v = 0; v < t.quiver.n(); ++v) dims[v] += m[a] * t.inds[a].dims[v];
  if (dims != x.dims) throw AlgebraError("decomposition does not account for the dimension vector");
  return m;
}

}  // namespace dx
