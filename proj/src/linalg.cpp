#include "tatepol/linalg.hpp"

#include <algorithm>
#include <utility>

namespace tatepol {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

namespace {

template <class T>
Matrix<T> block_diag_impl(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

// Gaussian elimination over Q; returns rank and (optionally) the determinant.
std::size_t eliminate(RatMatrix a, Rational* det) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t row = 0;
  Rational d = 1;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a(piv, col) == 0) ++piv;
    if (piv == m) {
      d = 0;
      continue;
    }
    if (piv != row) {
      a.swap_rows(piv, row);
      d = -d;
    }
    d *= a(row, col);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(row, col);
      a.add_row(i, row, Rational(-f));
    }
    ++row;
  }
  if (det) *det = (row == n && m == n) ? d : Rational(0);
  return row;
}

}  // namespace

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) { return block_diag_impl(a, b); }
RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) { return block_diag_impl(a, b); }

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Rational d;
  eliminate(m, &d);
  return d;
}

std::size_t rank(const RatMatrix& m) { return eliminate(m, nullptr); }
std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, col);
    inv.swap_rows(piv, col);
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = -a(i, col);
      a.add_row(i, col, f);
      inv.add_row(i, col, f);
    }
  }
  return inv;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

bool is_alternating(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

bool is_symmetric(const RatMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer bilinear(const IntMatrix& m, const IntVector& x, const IntVector& y) { return dot(x, m * y); }

Rational bilinear(const RatMatrix& m, const IntVector& x, const IntVector& y) {
  if (m.rows() != x.size() || m.cols() != y.size()) throw std::invalid_argument("bilinear: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += Rational(x[i]) * m(i, j) * Rational(y[j]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& D = s.D;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: the nonzero entry of least absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          if (pi == rows || abs(D(i, j)) < best) {
            best = abs(D(i, j));
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return s;  // trailing block is zero

      D.swap_rows(t, pi);
      s.U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      s.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_row(i, t, Integer(-q));
        s.U.add_row(i, t, Integer(-q));
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        D.add_col(j, t, Integer(-q));
        s.V.add_col(j, t, Integer(-q));
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row with an entry not divisible by the pivot
      // into row t; the next pass then finds a smaller remainder.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      D.add_row(t, bad, Integer(1));
      s.U.add_row(t, bad, Integer(1));
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm h{a, IntMatrix::identity(m), 0, {}};
  IntMatrix& H = h.H;
  IntMatrix& U = h.U;
  std::size_t row = 0;

  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (std::size_t i = row + 1; i < m; ++i) {
      if (H(i, col) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H(row, col).get_mpz_t(), H(i, col).get_mpz_t());
      Integer a_g = H(row, col) / g;
      Integer b_g = H(i, col) / g;
      // [s t; -b/g a/g] has determinant 1.
      for (IntMatrix* X : {&H, &U}) {
        for (std::size_t j = 0; j < X->cols(); ++j) {
          Integer x = (*X)(row, j), y = (*X)(i, j);
          (*X)(row, j) = s * x + t * y;
          (*X)(i, j) = a_g * y - b_g * x;
        }
      }
    }
    if (H(row, col) == 0) continue;
    if (H(row, col) < 0) {
      H.negate_row(row);
      U.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, col).get_mpz_t(), H(row, col).get_mpz_t());
      H.add_row(i, row, Integer(-q));
      U.add_row(i, row, Integer(-q));
    }
    h.pivot_cols.push_back(col);
    ++row;
  }
  h.rank = row;
  return h;
}

// ---------------------------------------------------------------------------
// Saturated sublattices

SaturatedSublattice make_saturated_unchecked(std::size_t n, const IntMatrix& columns) {
  if (columns.cols() == 0) return SaturatedSublattice(n, IntMatrix(n, 0));
  HermiteForm h = hermite_normal_form(columns.transpose());
  return SaturatedSublattice(n, h.H.block(0, 0, h.rank, n).transpose());
}

SaturatedSublattice SaturatedSublattice::zero(std::size_t ambient_rank) {
  return SaturatedSublattice(ambient_rank, IntMatrix(ambient_rank, 0));
}

SaturatedSublattice SaturatedSublattice::full(std::size_t ambient_rank) {
  return SaturatedSublattice(ambient_rank, IntMatrix::identity(ambient_rank));
}

bool SaturatedSublattice::contains(const IntVector& x) const {
  if (x.size() != ambient_rank_) throw std::invalid_argument("sublattice membership: size mismatch");
  IntMatrix aug = hstack(basis_, IntMatrix::from_columns(ambient_rank_, {x}));
  return tatepol::rank(aug) == rank();
}

bool SaturatedSublattice::contains(const SaturatedSublattice& other) const {
  if (other.ambient_rank_ != ambient_rank_) return false;
  if (other.rank() > rank()) return false;
  return tatepol::rank(hstack(basis_, other.basis_)) == rank();
}

namespace {

// Integer kernel basis as columns: rows of the Hermite transform of M^T that
// sit against zero rows of H. U is unimodular, so these columns extend to a
// basis of Z^n and span a saturated lattice.
IntMatrix integer_kernel_columns(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HermiteForm h = hermite_normal_form(m.transpose());
  IntMatrix k(n, n - h.rank);
  for (std::size_t r = h.rank; r < n; ++r)
    for (std::size_t i = 0; i < n; ++i) k(i, r - h.rank) = h.U(r, i);
  return k;
}

}  // namespace

SaturatedSublattice kernel_saturated(const IntMatrix& m) {
  return make_saturated_unchecked(m.cols(), integer_kernel_columns(m));
}

SaturatedSublattice kernel_saturated(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) z(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return kernel_saturated(z);
}

SaturatedSublattice saturate(const IntMatrix& columns) {
  const std::size_t n = columns.rows();
  if (rank(columns) != columns.cols()) throw std::invalid_argument("saturate: columns are linearly dependent");
  if (columns.cols() == 0) return SaturatedSublattice::zero(n);
  // Orthogonal complement, then its complement again.
  IntMatrix relations = integer_kernel_columns(columns.transpose());
  if (relations.cols() == 0) return SaturatedSublattice::full(n);
  return kernel_saturated(relations.transpose());
}

SaturatedSublattice image(const IntMatrix& unimodular, const SaturatedSublattice& sub) {
  if (!is_unimodular(unimodular) || unimodular.cols() != sub.ambient_rank())
    throw std::invalid_argument("image: map is not a lattice automorphism of the ambient lattice");
  return make_saturated_unchecked(sub.ambient_rank(), unimodular * sub.basis());
}

// ---------------------------------------------------------------------------
// Positivity

std::vector<Rational> leading_principal_minors(const RatMatrix& s) {
  if (!s.is_square()) throw std::invalid_argument("leading minors of non-square matrix");
  // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}.
  // A zero pivot means the remaining minors must be computed directly.
  const std::size_t n = s.rows();
  std::vector<Rational> minors;
  RatMatrix a = s;
  Rational running = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      for (std::size_t j = k; j < n; ++j) minors.push_back(determinant(s.block(0, 0, j + 1, j + 1)));
      return minors;
    }
    running *= a(k, k);
    minors.push_back(running);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = -a(i, k) / a(k, k);
      a.add_row(i, k, f);
    }
  }
  return minors;
}

bool is_positive_definite(const RatMatrix& s) {
  if (!s.is_square()) throw std::invalid_argument("positivity test needs a square matrix");
  if (!is_symmetric(s)) throw std::invalid_argument("positivity test needs a symmetric matrix");
  for (const auto& m : leading_principal_minors(s))
    if (sgn(m) <= 0) return false;
  return true;
}

}  // namespace tatepol
