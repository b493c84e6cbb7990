#include "tatepol/linalg.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tatepol/oracles.hpp"

using namespace tatepol;
using tatepol::testing::random_int_matrix;

namespace {

bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

bool divisibility_chain(const std::vector<Integer>& d) {
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0) {
      if (d[i + 1] != 0) return false;
    } else if (!mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) {
      return false;
    }
  }
  return d.empty() || d.back() >= 0;
}

void expect_valid_smith(const IntMatrix& m, const SmithForm& s) {
  EXPECT_EQ(s.U * m * s.V, s.D);
  EXPECT_TRUE(is_unimodular(s.U));
  EXPECT_TRUE(is_unimodular(s.V));
  EXPECT_TRUE(is_diagonal(s.D));
  EXPECT_TRUE(divisibility_chain(s.diagonal()));
}

}  // namespace

TEST(SmithNormalForm, Identity) {
  const auto s = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(s.D, IntMatrix::identity(3));
  expect_valid_smith(IntMatrix::identity(3), s);
}

TEST(SmithNormalForm, Diag2And3) {
  const IntMatrix m{{2, 0}, {0, 3}};
  const auto s = smith_normal_form(m);
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
  expect_valid_smith(m, s);
}

TEST(SmithNormalForm, Zero) {
  const IntMatrix z(2, 2);
  const auto s = smith_normal_form(z);
  EXPECT_TRUE(s.D.is_zero());
  expect_valid_smith(z, s);
}

TEST(SmithNormalForm, FuzzedUpTo8x8) {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 8));
    const IntMatrix m = random_int_matrix(rng, r, c, 20);
    expect_valid_smith(m, smith_normal_form(m));
  }
}

TEST(SmithNormalForm, ProductOfInvariantsIsDeterminant) {
  Rng rng(12);
  for (int it = 0; it < 50; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const IntMatrix m = random_int_matrix(rng, n, n, 9);
    Integer prod = 1;
    for (const auto& d : smith_normal_form(m).diagonal()) prod *= d;
    EXPECT_EQ(prod, abs(determinant(m)));
  }
}

TEST(Determinant, BareissMatchesRational) {
  Rng rng(13);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    const IntMatrix m = random_int_matrix(rng, n, n, 5);
    EXPECT_EQ(Rational(determinant(m)), determinant(to_rational(m)));
  }
}

TEST(HermiteNormalForm, TransformAndShape) {
  Rng rng(14);
  for (int it = 0; it < 100; ++it) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 6));
    const IntMatrix a = random_int_matrix(rng, r, c, 6);
    const HermiteForm h = hermite_normal_form(a);
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_TRUE(is_unimodular(h.U));
    EXPECT_EQ(h.rank, rank(to_rational(a)));
    for (std::size_t i = 0; i < h.rank; ++i) {
      const std::size_t pc = h.pivot_cols[i];
      EXPECT_GT(h.H(i, pc), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.H(k, pc), 0);
        EXPECT_LT(h.H(k, pc), h.H(i, pc));
      }
    }
    for (std::size_t i = h.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) EXPECT_EQ(h.H(i, j), 0);
  }
}

TEST(KernelSaturated, ZeroMapGivesFullLattice) {
  EXPECT_EQ(kernel_saturated(IntMatrix(2, 2)), SaturatedSublattice::full(2));
}

TEST(KernelSaturated, NondegenerateGivesZero) {
  const auto k = kernel_saturated(IntMatrix{{0, 2}, {-2, 0}});
  EXPECT_EQ(k.rank(), 0u);
}

TEST(KernelSaturated, BlockDiagonalAgainstEnumeration) {
  const IntMatrix m{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  const auto k = kernel_saturated(m);
  EXPECT_EQ(k, saturate(IntMatrix{{0, 0}, {0, 0}, {1, 0}, {0, 1}}));

  const auto box = oracles::brute_kernel(m, 2);
  EXPECT_EQ(box.size(), 25u);
  for (const auto& x : box) EXPECT_TRUE(k.contains(x));
}

TEST(KernelSaturated, RationalInput) {
  const RatMatrix m{{Rational(1, 2), Rational(1, 3)}};
  const auto k = kernel_saturated(m);
  ASSERT_EQ(k.rank(), 1u);
  EXPECT_TRUE(k.contains(IntVector{2, -3}));
}

TEST(KernelSaturated, FuzzedMembershipAndMaximality) {
  Rng rng(15);
  for (int it = 0; it < 60; ++it) {
    const auto r = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto c = static_cast<std::size_t>(rng.uniform(1, 4));
    // Low-rank products so the kernel is usually nontrivial.
    const IntMatrix m = random_int_matrix(rng, r, 2, 3) * random_int_matrix(rng, 2, c, 3);
    const auto k = kernel_saturated(m);
    EXPECT_EQ(k.rank(), c - rank(to_rational(m)));
    EXPECT_TRUE((m * k.basis()).is_zero());
    // Every kernel vector in a box lies in the returned lattice; every box
    // vector outside it is not in the kernel.
    const auto kernel_box = oracles::brute_kernel(m, 2);
    for (const auto& x : kernel_box) EXPECT_TRUE(k.contains(x));
    for (int s = 0; s < 10; ++s) {
      const IntVector x = tatepol::testing::random_vector(rng, c, 3);
      bool in_kernel = true;
      for (const auto& y : m * x) in_kernel = in_kernel && y == 0;
      EXPECT_EQ(k.contains(x), in_kernel);
    }
  }
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(IntMatrix{{2}, {0}}), saturate(IntMatrix{{1}, {0}}));
  const auto diag = saturate(IntMatrix{{1}, {1}});
  EXPECT_EQ(smith_normal_form(diag.basis()).diagonal(), std::vector<Integer>{1});
  EXPECT_TRUE(diag.contains(IntVector{1, 1}));
  // Index 8 sublattice, saturation is everything.
  const IntMatrix index8{{2, 2}, {2, -2}};
  EXPECT_EQ(abs(determinant(index8)), 8);
  EXPECT_EQ(saturate(index8), SaturatedSublattice::full(2));
}

TEST(Saturate, RejectsDependentColumns) {
  EXPECT_THROW(saturate(IntMatrix{{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST(Saturate, IdempotentAndUnitSmithInvariants) {
  Rng rng(16);
  for (int it = 0; it < 100; ++it) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n)));
    const IntMatrix cols = random_int_matrix(rng, n, k, 6);
    if (rank(to_rational(cols)) != k) continue;
    const auto s = saturate(cols);
    EXPECT_EQ(saturate(s.basis()), s);
    for (const auto& d : smith_normal_form(s.basis()).diagonal()) EXPECT_EQ(d, 1);
    for (std::size_t j = 0; j < k; ++j) EXPECT_TRUE(s.contains(cols.column(j)));
    EXPECT_EQ(s.rank(), k);
  }
}

TEST(PositiveDefinite, Examples) {
  EXPECT_TRUE(is_positive_definite(RatMatrix::identity(3)));
  EXPECT_FALSE(is_positive_definite(RatMatrix{{1, 2}, {2, 1}}));
  EXPECT_EQ(leading_principal_minors(RatMatrix{{1, 2}, {2, 1}}), (std::vector<Rational>{1, -3}));
  EXPECT_TRUE(is_positive_definite(RatMatrix{{2, 1}, {1, 1}}));
  EXPECT_EQ(leading_principal_minors(RatMatrix{{2, 1}, {1, 1}}), (std::vector<Rational>{2, 1}));
}

TEST(PositiveDefinite, ZeroLeadingEntryStillComputesMinors) {
  const RatMatrix s{{0, 1}, {1, 0}};
  EXPECT_EQ(leading_principal_minors(s), (std::vector<Rational>{0, -1}));
  EXPECT_FALSE(is_positive_definite(s));
}

TEST(PositiveDefinite, RejectsNonSymmetric) {
  EXPECT_THROW(is_positive_definite(RatMatrix{{1, 2}, {0, 1}}), std::invalid_argument);
}
