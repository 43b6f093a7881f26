#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dx/ratlin.hpp"

using namespace dx;

namespace {

// Determinant by cofactor expansion; only used on tiny matrices.
Q det_oracle(const QMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Q s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    QMat minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    s += (j % 2 ? -1 : 1) * m(0, j) * det_oracle(minor);
  }
  return s;
}

// Rank as the largest nonvanishing minor.
std::size_t rank_oracle(const QMat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t best = 0;
  for (std::size_t rm = 0; rm < (1u << r); ++rm)
    for (std::size_t cm = 0; cm < (1u << c); ++cm) {
      const int k = __builtin_popcount(rm);
      if (k != __builtin_popcount(cm) || static_cast<std::size_t>(k) <= best) continue;
      QMat sq(k, k);
      for (std::size_t i = 0, ii = 0; i < r; ++i) {
        if (!(rm >> i & 1)) continue;
        for (std::size_t j = 0, jj = 0; j < c; ++j)
          if (cm >> j & 1) sq(ii, jj++) = m(i, j);
        ++ii;
      }
      if (det_oracle(sq) != 0) best = k;
    }
  return best;
}

QMat random_int(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("rref of a fixed matrix") {
  QMat m = QMat::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  Rref r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.R == QMat::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(rank(m) == 2);
}

TEST_CASE("rank agrees with the minor oracle on random small matrices") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    QMat m = random_int(rng, r, c, -1, 1);  // small entries make rank drops common
    CHECK(rank(m) == rank_oracle(m));
  }
}

TEST_CASE("kernel basis: m K = 0 and rank-nullity") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    QMat m = random_int(rng, r, c, -2, 2);
    QMat k = kernel_basis(m);
    CHECK(k.rows() == c);
    CHECK(k.cols() + rank(m) == c);
    if (k.cols() > 0) {
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
    }
  }
}

TEST_CASE("image basis spans the column space") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    QMat m = random_int(rng, 1 + rng() % 4, 1 + rng() % 4, -2, 2);
    QMat im = image_basis(m);
    CHECK(im.cols() == rank(m));
    if (im.cols() > 0) {
      CHECK(rank(QMat::hcat(im, m)) == im.cols());
      CHECK(image_basis(im) == im);  // canonical form
    }
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = 1 + rng() % 4;
    QMat m = random_int(rng, n, n, -3, 3);
    auto inv = inverse(m);
    CHECK(inv.has_value() == (det_oracle(m) != 0));
    if (inv) {
      CHECK(*inv * m == QMat::identity(n));
      CHECK(m * *inv == QMat::identity(n));
    }
    QMat x = random_int(rng, n, 1, -5, 5);
    QVec b = m.apply(x.col(0));
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
  // inconsistent system
  CHECK_FALSE(solve(QMat::from_rows({{1, 1}, {1, 1}}), QVec{Q(1), Q(2)}).has_value());
}

TEST_CASE("exact fractions survive elimination") {
  QMat m = QMat::from_rows({{3, 1}, {1, 2}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((*inv)(0, 0) == Q(2, 5));
  CHECK((*inv)(0, 1) == Q(-1, 5));
  CHECK((*inv)(1, 1) == Q(3, 5));
}

TEST_CASE("shape mismatch is reported") {
  CHECK_THROWS_AS(QMat(2, 3) * QMat(2, 3), DimensionMismatch);
}

TEST_CASE("complement indices complete a basis") {
  QMat b = QMat::from_rows({{1}, {1}, {0}});
  auto idx = complement_indices(b);
  CHECK(idx.size() == 2);
  QMat all = b;
  for (auto i : idx) {
    QMat e(3, 1);
    e(i, 0) = 1;
    all = QMat::hcat(all, e);
  }
  CHECK(rank(all) == 3);
}

TEST_CASE("small algebras: associativity, unit, radical") {
  for (const FDAlg& a : {FDAlg::ground_field(), FDAlg::dual_numbers(), FDAlg::upper_triangular2(), FDAlg::product(3)}) {
    CHECK(a.is_associative());
    CHECK(a.unit_ok());
  }
  CHECK(radical(FDAlg::ground_field()).cols() == 0);
  CHECK(radical(FDAlg::dual_numbers()).cols() == 1);
  CHECK(radical(FDAlg::upper_triangular2()).cols() == 1);
  CHECK(radical(FDAlg::product(3)).cols() == 0);
}

TEST_CASE("count_simples of quotients") {
  CHECK(count_simples(FDAlg::product(3), {}) == 3);
  CHECK(count_simples(FDAlg::dual_numbers(), {}) == 1);
  CHECK(count_simples(FDAlg::upper_triangular2(), {}) == 2);
  FDAlg p = FDAlg::product(3);
  CHECK(count_simples(p, {p.basis_vec(0)}) == 2);
  CHECK(count_simples(p, {p.basis_vec(0), p.basis_vec(2)}) == 1);
  CHECK(count_simples(p, {p.unit}) == 0);
  // killing the radical of the dual numbers leaves the ground field
  FDAlg dn = FDAlg::dual_numbers();
  CHECK(count_simples(dn, {dn.basis_vec(1)}) == 1);
}

TEST_CASE("ideal span is two-sided") {
  FDAlg a = FDAlg::upper_triangular2();
  std::mt19937_64 rng(3);
  for (std::size_t g = 0; g < a.dim; ++g) {
    QMat span = ideal_span(a, {a.basis_vec(g)});
    for (std::size_t c = 0; c < span.cols(); ++c)
      for (std::size_t i = 0; i < a.dim; ++i) {
        CHECK(solve(span, a.mul(a.basis_vec(i), span.col(c))).has_value());
        CHECK(solve(span, a.mul(span.col(c), a.basis_vec(i))).has_value());
      }
  }
}
