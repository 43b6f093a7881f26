#include "dx/ratlin.hpp"

#include <sstream>

namespace dx {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::column(const QVec& v) {
  QMat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (c_ != o.r_) throw DimensionMismatch("matrix product shape mismatch");
  QMat m(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Q& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum shape mismatch");
  QMat m(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

QMat QMat::operator-(const QMat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix difference shape mismatch");
  QMat m(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

QMat QMat::scaled(const Q& s) const {
  QMat m(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
  return m;
}

QVec QMat::apply(const QVec& v) const {
  if (v.size() != c_) throw DimensionMismatch("matrix-vector shape mismatch");
  QVec out(r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QMat QMat::transpose() const {
  QMat m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

QMat QMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw DimensionMismatch("block out of range");
  QMat m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void QMat::set_block(std::size_t r0, std::size_t c0, const QMat& b) {
  if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DimensionMismatch("set_block out of range");
  for (std::size_t i = 0; i < b.r_; ++i)
    for (std::size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

QVec QMat::col(std::size_t j) const {
  QVec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMat QMat::cols_subset(const std::vector<std::size_t>& idx) const {
  QMat m(r_, idx.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

QMat QMat::hcat(const QMat& a, const QMat& b) {
  if (a.r_ != b.r_ && a.c_ && b.c_) throw DimensionMismatch("hcat row mismatch");
  std::size_t r = a.c_ ? a.r_ : b.r_;
  QMat m(r, a.c_ + b.c_);
  if (a.c_) m.set_block(0, 0, a);
  if (b.c_) m.set_block(0, a.c_, b);
  return m;
}

QMat QMat::vcat(const QMat& a, const QMat& b) {
  if (a.c_ != b.c_ && a.r_ && b.r_) throw DimensionMismatch("vcat column mismatch");
  std::size_t c = a.r_ ? a.c_ : b.c_;
  QMat m(a.r_ + b.r_, c);
  if (a.r_) m.set_block(0, 0, a);
  if (b.r_) m.set_block(a.r_, 0, b);
  return m;
}

std::string QMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// Row reduction on integer rows: clear denominators per row, eliminate by
// cross-multiplication, strip row content after each update, normalize at the end.
Rref rref(const QMat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
  for (std::size_t i = 0; i < r; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < c; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto strip = [c](std::vector<mpz_class>& row) {
    mpz_class g = 0;
    for (std::size_t j = 0; j < c; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g > 1)
      for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  };
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < c && prow < r; ++col) {
    std::size_t sel = r;
    for (std::size_t i = prow; i < r; ++i)
      if (sgn(a[i][col]) != 0) { sel = i; break; }
    if (sel == r) continue;
    std::swap(a[prow], a[sel]);
    const mpz_class p = a[prow][col];
    for (std::size_t i = 0; i < r; ++i) {
      if (i == prow || sgn(a[i][col]) == 0) continue;
      const mpz_class b = a[i][col];
      for (std::size_t j = 0; j < c; ++j) a[i][j] = p * a[i][j] - b * a[prow][j];
      strip(a[i]);
    }
    pivots.push_back(col);
    ++prow;
  }
  Rref out{QMat(r, c), pivots};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class p = a[i][pivots[i]];
    for (std::size_t j = 0; j < c; ++j) {
      Q x(a[i][j], p);
      x.canonicalize();
      out.R(i, j) = x;
    }
  }
  return out;
}

std::size_t rank(const QMat& m) { return rref(m).pivots.size(); }

QMat kernel_basis(const QMat& m) {
  Rref rr = rref(m);
  const std::size_t c = m.cols();
  std::vector<bool> is_piv(c, false);
  for (auto p : rr.pivots) is_piv[p] = true;
  std::vector<std::size_t> freev;
  for (std::size_t j = 0; j < c; ++j)
    if (!is_piv[j]) freev.push_back(j);
  QMat k(c, freev.size());
  for (std::size_t f = 0; f < freev.size(); ++f) {
    k(freev[f], f) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) k(rr.pivots[i], f) = -rr.R(i, freev[f]);
  }
  return k;
}

QMat image_basis(const QMat& m) {
  Rref rr = rref(m.transpose());
  QMat b(m.rows(), rr.pivots.size());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) b(j, i) = rr.R(i, j);
  return b;
}

std::optional<QMat> solve_mat(const QMat& m, const QMat& b) {
  if (m.rows() != b.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  Rref rr = rref(QMat::hcat(m, b));
  QMat x(n, b.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.R(i, n + j);
  }
  return x;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  auto x = solve_mat(m, QMat::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve_mat(m, QMat::identity(m.rows()));
}

std::vector<std::size_t> complement_indices(const QMat& basis) {
  const std::size_t n = basis.rows(), k = basis.cols();
  Rref rr = rref(QMat::hcat(basis, QMat::identity(n)));
  std::vector<std::size_t> out;
  for (auto p : rr.pivots)
    if (p >= k) out.push_back(p - k);
  return out;
}

// ---------------------------------------------------------------- FDAlg

QVec FDAlg::mul(const QVec& x, const QVec& y) const {
  QVec z(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      Q s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(at(i, j, k)) != 0) z[k] += s * at(i, j, k);
    }
  }
  return z;
}

QMat FDAlg::left_mult(const QVec& x) const {
  QMat l(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) l(k, j) += x[i] * at(i, j, k);
  }
  return l;
}

QVec FDAlg::basis_vec(std::size_t i) const {
  QVec v(dim);
  v[i] = 1;
  return v;
}

bool FDAlg::is_associative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        auto a = basis_vec(i), b = basis_vec(j), c2 = basis_vec(k);
        if (mul(mul(a, b), c2) != mul(a, mul(b, c2))) return false;
      }
  return true;
}

bool FDAlg::unit_ok() const {
  for (std::size_t i = 0; i < dim; ++i) {
    auto e = basis_vec(i);
    if (mul(unit, e) != e || mul(e, unit) != e) return false;
  }
  return true;
}

FDAlg FDAlg::ground_field() {
  FDAlg a;
  a.dim = 1;
  a.c = {Q(1)};
  a.unit = {Q(1)};
  a.idempotents = {QVec{Q(1)}};
  return a;
}

FDAlg FDAlg::dual_numbers() {
  FDAlg a;
  a.dim = 2;
  a.c.assign(8, Q(0));
  a.at(0, 0, 0) = 1;
  a.at(0, 1, 1) = 1;
  a.at(1, 0, 1) = 1;
  a.unit = {Q(1), Q(0)};
  return a;
}

// Basis e11, e12, e22.
FDAlg FDAlg::upper_triangular2() {
  FDAlg a;
  a.dim = 3;
  a.c.assign(27, Q(0));
  a.at(0, 0, 0) = 1;
  a.at(0, 1, 1) = 1;
  a.at(1, 2, 1) = 1;
  a.at(2, 2, 2) = 1;
  a.unit = {Q(1), Q(0), Q(1)};
  a.idempotents = {QVec{1, 0, 0}, QVec{0, 0, 1}};
  return a;
}

FDAlg FDAlg::product(std::size_t copies) {
  FDAlg a;
  a.dim = copies;
  a.c.assign(copies * copies * copies, Q(0));
  a.unit.assign(copies, Q(1));
  for (std::size_t i = 0; i < copies; ++i) {
    a.at(i, i, i) = 1;
    a.idempotents.push_back(a.basis_vec(i));
  }
  return a;
}

QMat radical(const FDAlg& a) {
  if (!a.is_associative()) throw AlgebraError("structure constants are not associative");
  std::vector<QMat> L;
  for (std::size_t i = 0; i < a.dim; ++i) L.push_back(a.left_mult(a.basis_vec(i)));
  QMat t(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Q tr = 0;
      for (std::size_t p = 0; p < a.dim; ++p)
        for (std::size_t q = 0; q < a.dim; ++q) tr += L[i](p, q) * L[j](q, p);
      t(i, j) = tr;
    }
  return kernel_basis(t);
}

QMat ideal_span(const FDAlg& a, const std::vector<QVec>& gens) {
  QMat cols(a.dim, 0);
  for (const auto& g : gens) {
    if (g.size() != a.dim) throw DimensionMismatch("ideal generator has wrong length");
    for (std::size_t i = 0; i < a.dim; ++i) {
      QVec left = a.mul(a.basis_vec(i), g);
      for (std::size_t j = 0; j < a.dim; ++j) cols = QMat::hcat(cols, QMat::column(a.mul(left, a.basis_vec(j))));
    }
  }
  if (cols.cols() == 0) return QMat(a.dim, 0);
  return image_basis(cols);
}

FDAlg quotient(const FDAlg& a, const QMat& ib, std::vector<std::size_t>* kept_out) {
  std::vector<std::size_t> kept = complement_indices(ib);
  QMat full = QMat::hcat(ib, QMat::identity(a.dim).cols_subset(kept));
  QMat inv = *inverse(full);
  const std::size_t k0 = ib.cols(), m = kept.size();
  auto project = [&](const QVec& v) {
    QVec all = inv.apply(v);
    return QVec(all.begin() + static_cast<long>(k0), all.end());
  };
  FDAlg b;
  b.dim = m;
  b.c.assign(m * m * m, Q(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QVec p = project(a.mul(a.basis_vec(kept[i]), a.basis_vec(kept[j])));
      for (std::size_t k = 0; k < m; ++k) b.at(i, j, k) = p[k];
    }
  b.unit = project(a.unit);
  for (const auto& e : a.idempotents) {
    QVec p = project(e);
    bool nz = false;
    for (auto& x : p) nz = nz || sgn(x) != 0;
    if (nz) b.idempotents.push_back(p);
  }
  if (kept_out) *kept_out = kept;
  return b;
}

std::size_t count_simples(const FDAlg& a, const std::vector<QVec>& ideal_gens) {
  FDAlg b = quotient(a, ideal_span(a, ideal_gens));
  if (b.dim == 0) return 0;
  QMat rad = radical(b);
  const std::size_t ss = b.dim - rad.cols();
  auto in_rad = [&](const QVec& v) {
    if (rad.cols() == 0) {
      for (auto& x : v)
        if (sgn(x) != 0) return false;
      return true;
    }
    return solve(rad, v).has_value();
  };
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = i + 1; j < b.dim; ++j) {
      QVec x = b.mul(b.basis_vec(i), b.basis_vec(j)), y = b.mul(b.basis_vec(j), b.basis_vec(i));
      for (std::size_t k = 0; k < b.dim; ++k) x[k] -= y[k];
      if (!in_rad(x)) throw AlgebraError("semisimple quotient is not commutative: simple block of dimension > 1");
    }
  if (!b.idempotents.empty()) {
    QMat span = rad;
    for (const auto& e : b.idempotents) span = QMat::hcat(span, QMat::column(e));
    if (rank(span) != b.dim)
      throw AlgebraError("idempotents do not split the semisimple quotient");
  }
  return ss;
}

}  // namespace dx
