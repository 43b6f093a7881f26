#pragma once
// Exact rational matrices and finite-dimensional algebras over Q.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dx {

using Q = mpq_class;
using QVec = std::vector<Q>;

class QMat {
 public:
  QMat() = default;
  QMat(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c) {}
  static QMat identity(std::size_t n);
  static QMat from_rows(const std::vector<std::vector<long>>& rows);
  static QMat column(const QVec& v);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Q& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Q& s) const;
  QVec apply(const QVec& v) const;
  QMat transpose() const;
  bool is_zero() const;
  bool operator==(const QMat& o) const = default;

  QMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const QMat& b);
  QVec col(std::size_t j) const;
  QMat cols_subset(const std::vector<std::size_t>& idx) const;

  static QMat hcat(const QMat& a, const QMat& b);
  static QMat vcat(const QMat& a, const QMat& b);

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Q> a_;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Rref {
  QMat R;                          // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
};

Rref rref(const QMat& m);
std::size_t rank(const QMat& m);
// Columns span the kernel; one column per free variable, with a 1 in that
// variable's slot and zeros in the other free slots.
QMat kernel_basis(const QMat& m);
// Columns span the column space; canonical (transposed RREF of m^T).
QMat image_basis(const QMat& m);
std::optional<QVec> solve(const QMat& m, const QVec& b);
// Solves m X = b column by column; nullopt if any column is inconsistent.
std::optional<QMat> solve_mat(const QMat& m, const QMat& b);
std::optional<QMat> inverse(const QMat& m);
// Standard basis vectors completing the column span of `basis` to the whole
// space, as indices.
std::vector<std::size_t> complement_indices(const QMat& basis);

// Structure constants e_i e_j = sum_k c[i][j][k] e_k.
struct FDAlg {
  std::size_t dim = 0;
  std::vector<Q> c;  // dim^3
  QVec unit;
  std::vector<QVec> idempotents;  // optional complete set of primitive orthogonal idempotents

  const Q& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * dim + j) * dim + k]; }
  Q& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
  QVec mul(const QVec& x, const QVec& y) const;
  QMat left_mult(const QVec& x) const;
  QVec basis_vec(std::size_t i) const;
  bool is_associative() const;
  bool unit_ok() const;

  static FDAlg ground_field();
  static FDAlg dual_numbers();
  static FDAlg upper_triangular2();
  static FDAlg product(std::size_t copies);
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jacobson radical as the radical of the trace form (char 0). Columns = basis.
QMat radical(const FDAlg& a);
// Two-sided ideal generated by gens, as column basis.
QMat ideal_span(const FDAlg& a, const std::vector<QVec>& gens);
FDAlg quotient(const FDAlg& a, const QMat& ideal_basis, std::vector<std::size_t>* kept = nullptr);
std::size_t count_simples(const FDAlg& a, const std::vector<QVec>& ideal_gens);

}  // namespace dx
