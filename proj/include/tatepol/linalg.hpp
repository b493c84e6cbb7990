#pragma once

// Exact integer / rational matrices and the lattice algorithms the rest of
// the library is built on (Smith and Hermite forms, saturated kernels,
// positivity). Everything here is exact; there is no floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tatepol {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  // Row/column operations used by the reduction algorithms.
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += q * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
  }
  // col[dst] += q * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = -a.data_[k];
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector product: size mismatch");
    std::vector<T> y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// nullopt when some entry has a nontrivial denominator.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b);
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& m);   // fraction-free (Bareiss)
Rational determinant(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

bool is_unimodular(const IntMatrix& m);
bool is_alternating(const IntMatrix& m);
bool is_symmetric(const RatMatrix& m);

Integer dot(const IntVector& a, const IntVector& b);
// x^T M y
Integer bilinear(const IntMatrix& m, const IntVector& x, const IntVector& y);
Rational bilinear(const RatMatrix& m, const IntVector& x, const IntVector& y);

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: U * A = H with U unimodular, H in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot). The nonzero rows of H are unique for a given row lattice.
struct HermiteForm {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// A sublattice L of Z^n with Z^n / L torsion-free, held by a canonical
/// basis (Hermite-reduced), so equality of lattices is equality of bases.
class SaturatedSublattice {
 public:
  static SaturatedSublattice zero(std::size_t ambient_rank);
  static SaturatedSublattice full(std::size_t ambient_rank);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  /// ambient_rank x rank, columns are basis vectors.
  const IntMatrix& basis() const { return basis_; }

  /// Membership of a lattice vector (equivalently of the rational span,
  /// because the lattice is saturated).
  bool contains(const IntVector& x) const;
  bool contains(const SaturatedSublattice& other) const;

  friend bool operator==(const SaturatedSublattice& a, const SaturatedSublattice& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const SaturatedSublattice& a, const SaturatedSublattice& b) { return !(a == b); }

 private:
  friend SaturatedSublattice make_saturated_unchecked(std::size_t, const IntMatrix&);
  SaturatedSublattice(std::size_t n, IntMatrix basis) : ambient_rank_(n), basis_(std::move(basis)) {}

  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
};

/// {x in Z^n : M x = 0}; rational input is cleared of denominators row by row.
SaturatedSublattice kernel_saturated(const IntMatrix& m);
SaturatedSublattice kernel_saturated(const RatMatrix& m);

/// Smallest saturated sublattice containing the given columns. Throws
/// std::invalid_argument when the columns are linearly dependent.
SaturatedSublattice saturate(const IntMatrix& columns);

/// Image of a saturated sublattice under a unimodular map.
SaturatedSublattice image(const IntMatrix& unimodular, const SaturatedSublattice& sub);

/// Exact test: every leading principal minor is positive. Throws
/// std::invalid_argument for non-square or non-symmetric input.
bool is_positive_definite(const RatMatrix& s);

/// Leading principal minors det(S[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const RatMatrix& s);

}  // namespace tatepol
