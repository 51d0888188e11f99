#include <gtest/gtest.h>

#include <cmath>

#include "opmeans/eigen_kernel.hpp"
#include "test_support.hpp"

using namespace opmeans;
using opmeans::testing::orthogonality_error;
using opmeans::testing::random_pd;
using opmeans::testing::random_symmetric;
using opmeans::testing::rel_diff;

TEST(EigSym, DiagonalInputIsAlreadyDecomposed) {
  const auto d = eig_sym(Matrix::diagonal({2.0, 3.0}));
  EXPECT_EQ(d.eigenvalues, (std::vector<double>{2.0, 3.0}));
  EXPECT_EQ(d.basis, Matrix::identity(2));
}

TEST(EigSym, SwapMatrixClosedForm) {
  const auto d = eig_sym(Matrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(d.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(d.eigenvalues[1], 1.0, 1e-15);
  // Columns are (1,-1)/sqrt2 and (1,1)/sqrt2 up to sign.
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(d.basis(0, 0)), r, 1e-15);
  EXPECT_NEAR(d.basis(0, 0), -d.basis(1, 0), 1e-15);
  EXPECT_NEAR(std::abs(d.basis(0, 1)), r, 1e-15);
  EXPECT_NEAR(d.basis(0, 1), d.basis(1, 1), 1e-15);
}

TEST(EigSym, IdentityAnyDimension) {
  for (std::size_t n : {1u, 3u, 7u}) {
    const auto d = eig_sym(Matrix::identity(n));
    for (double x : d.eigenvalues) EXPECT_EQ(x, 1.0);
  }
}

TEST(EigSym, ZeroMatrix) {
  const auto d = eig_sym(Matrix(3, 3));
  for (double x : d.eigenvalues) EXPECT_EQ(x, 0.0);
}

TEST(EigSym, RandomReconstructionAndOrthogonality) {
  SplitMix64 rng(20240601);
  for (int draw = 0; draw < 100; ++draw) {
    const std::size_t n = 1 + draw % 8;
    const Matrix X = random_symmetric(n, rng);
    const auto d = eig_sym(X);
    EXPECT_LE(frobenius_norm(d.reconstruct() - X), 1e-10 * frobenius_norm(X));
    EXPECT_LE(orthogonality_error(d.basis), 1e-10);
    EXPECT_TRUE(std::is_sorted(d.eigenvalues.begin(), d.eigenvalues.end()));
  }
}

TEST(EigSym, LargerDimensionConverges) {
  SplitMix64 rng(7);
  const Matrix X = random_symmetric(60, rng);
  const auto d = eig_sym(X);
  EXPECT_LE(frobenius_norm(d.reconstruct() - X), 1e-10 * frobenius_norm(X));
  EXPECT_LE(orthogonality_error(d.basis), 1e-10);
}

TEST(EigSym, SweepCapRaisesNumericalFailure) {
  SplitMix64 rng(3);
  const Matrix X = random_symmetric(6, rng);
  EXPECT_THROW(eig_sym(X, JacobiOptions{0, 1e-14}), NumericalFailure);
  EXPECT_THROW(eig_sym(X, JacobiOptions{1, 1e-14}), NumericalFailure);
}

TEST(EigSym, OverflowingEntriesRaiseNumericalFailure) {
  const Matrix X{{1e308, 1e308}, {1e308, -1e308}};
  EXPECT_THROW(eig_sym(X), NumericalFailure);
}

TEST(EigSym, RejectsOversizedAndNonSquare) {
  EXPECT_THROW(eig_sym(Matrix(2, 3)), InputError);
  EXPECT_THROW(eig_sym(Matrix(513, 513)), InputError);
}

TEST(SymPDMatrix, SymmetrizesWithinTolerance) {
  const Matrix X{{2.0, 1.0 + 1e-13}, {1.0, 2.0}};
  const auto A = SymPDMatrix::from(X);
  EXPECT_EQ(A.matrix()(0, 1), A.matrix()(1, 0));
  EXPECT_THROW(SymPDMatrix::from(Matrix{{2.0, 1.1}, {1.0, 2.0}}), InputError);
}

TEST(SymPDMatrix, PositiveDefiniteGate) {
  EXPECT_THROW(SymPDMatrix::from(Matrix::diagonal({1.0, 0.0})), InputError);
  EXPECT_THROW(SymPDMatrix::from(Matrix::diagonal({1.0, -2.0})), InputError);
  EXPECT_THROW(SymPDMatrix::from(Matrix::diagonal({1.0, 1e-13})), InputError);
  EXPECT_NO_THROW(SymPDMatrix::from(Matrix::diagonal({1.0, 1e-11})));
}

TEST(MatFpow, DiagonalSquareRoot) {
  const auto X = SymPDMatrix::from(Matrix::diagonal({4.0, 9.0}));
  EXPECT_LE(rel_diff(mat_fpow(X, 0.5), Matrix::diagonal({2.0, 3.0})), 1e-15);
}

TEST(MatFpow, SpecialExponents) {
  SplitMix64 rng(11);
  const auto X = SymPDMatrix::from(random_pd(5, rng));
  EXPECT_EQ(mat_fpow(X, 0.0), Matrix::identity(5));
  EXPECT_EQ(mat_fpow(X, 1.0), X.matrix());
  EXPECT_LE(rel_diff(X.matrix() * mat_fpow(X, -1.0), Matrix::identity(5)), 1e-12);
  const auto one = SymPDMatrix::from(Matrix::diagonal({2.0}));
  EXPECT_DOUBLE_EQ(mat_fpow(one, -1.0)(0, 0), 0.5);
}

TEST(MatFpow, DomainErrorNamesEigenvalue) {
  const Matrix X = Matrix::diagonal({1.0, -4.0});
  try {
    (void)mat_fpow(X, 0.5);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("-4"), std::string::npos);
  }
  EXPECT_EQ(mat_fpow(X, 2.0), Matrix::diagonal({1.0, 16.0}));
  EXPECT_EQ(mat_fpow(X, 1.0), X);
}

TEST(MatFpow, SquareOfRootAndPowerLaw) {
  SplitMix64 rng(99);
  for (int draw = 0; draw < 50; ++draw) {
    const std::size_t n = 1 + draw % 8;
    const auto X = SymPDMatrix::from(random_pd(n, rng));
    EXPECT_LE(rel_diff(mat_fpow(mat_fpow(X, 0.5), 2.0), X.matrix()), 1e-9);
    const double p = rng.uniform(-1.5, 1.5);
    const double q = rng.uniform(-1.5, 1.5);
    EXPECT_LE(rel_diff(mat_fpow(X, p) * mat_fpow(X, q), mat_fpow(X, p + q)), 1e-9);
  }
}

TEST(Congruence, Examples) {
  SplitMix64 rng(5);
  const Matrix Q = random_orthogonal(4, rng);
  EXPECT_LE(rel_diff(congruence(Matrix::identity(4), Q), Matrix::identity(4)), 1e-14);
  EXPECT_EQ(congruence(Matrix::diagonal({1.0, 2.0}), Matrix::diagonal({2.0, 1.0})),
            Matrix::diagonal({4.0, 2.0}));
  const Matrix X = random_symmetric(4, rng);
  EXPECT_EQ(congruence(X, Matrix::identity(4)), X);
  EXPECT_THROW(congruence(X, Matrix::identity(3)), InputError);
}

TEST(Congruence, ResultIsExactlySymmetric) {
  SplitMix64 rng(8);
  Matrix C(5, 3);
  for (double& x : C.data()) x = rng.normal();
  const Matrix R = congruence(random_pd(5, rng), C);
  EXPECT_EQ(R, R.transpose());
  EXPECT_EQ(R.rows(), 3u);
}

TEST(LoewnerGeqZero, Examples) {
  const auto a = loewner_geq_zero(Matrix::diagonal({1.0, 3.0}) - Matrix::diagonal({1.0, 2.0}));
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.min_eig, 0.0);
  const auto b = loewner_geq_zero(Matrix::diagonal({2.0, 1.0}) - Matrix::diagonal({1.0, 2.0}));
  EXPECT_FALSE(b.holds);
  EXPECT_EQ(b.min_eig, -1.0);
  EXPECT_TRUE(loewner_geq_zero(Matrix(3, 3)).holds);
}

TEST(LoewnerGeqZero, ToleranceIsRelativeToNorm) {
  EXPECT_TRUE(loewner_geq_zero(Matrix::diagonal({-1e-10, 1.0}), 1e-9).holds);
  EXPECT_FALSE(loewner_geq_zero(Matrix::diagonal({-1e-8, 1.0}), 1e-9).holds);
  EXPECT_TRUE(loewner_geq_zero(Matrix::diagonal({-1e-4, 1e6}), 1e-9).holds);
}

TEST(LoewnerGeqZero, DifferenceWithItselfHolds) {
  SplitMix64 rng(12);
  for (int i = 0; i < 20; ++i) {
    const Matrix X = random_symmetric(1 + i % 6, rng);
    const auto verdict = loewner_geq_zero(X - X, 1e-15);
    EXPECT_TRUE(verdict.holds);
    EXPECT_EQ(verdict.min_eig, 0.0);
  }
}

TEST(SpectralBounds, Examples) {
  EXPECT_EQ(spectral_bounds(SymPDMatrix::from(Matrix::diagonal({2.0, 3.0}))),
            std::make_pair(2.0, 3.0));
  EXPECT_EQ(spectral_bounds(SymPDMatrix::from(Matrix::identity(3) * 4.0)), std::make_pair(4.0, 4.0));
  const auto [lo, hi] = spectral_bounds(SymPDMatrix::from(Matrix{{2.0, 1.0}, {1.0, 2.0}}));
  EXPECT_NEAR(lo, 1.0, 1e-15);
  EXPECT_NEAR(hi, 3.0, 1e-15);
}
