#include "mvsig/errors.hpp"
#include "mvsig/signal.hpp"
#include "oracle/quadrature_oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace mvsig {
namespace {

using test::MatrixNear;

TEST(InnerProduct, IdentityCoefficientGivesIdentity) {
  const auto f = MatrixSignal::canonical(3, 1, 0);
  EXPECT_TRUE(MatrixNear(inner_product(f, f), CMatrix::Identity(3, 3), 0.0));
}

TEST(InnerProduct, DisjointCoefficientsAreOrthogonal) {
  const auto f = MatrixSignal::canonical(2, 2, 0);
  const auto g = MatrixSignal::canonical(2, 2, 1);
  EXPECT_TRUE(MatrixNear(inner_product(f, g), CMatrix::Zero(2, 2), 0.0));
}

TEST(InnerProduct, MatchesQuadratureOfSynthesizedSignals) {
  const auto rule = oracle::gauss_legendre_newton(4096);
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = rng.signal(2, 3);
    const auto g = rng.signal(2, 3);
    const CMatrix expected = oracle::integrate_product(f.coeffs(), g.coeffs(), rule);
    EXPECT_TRUE(MatrixNear(inner_product(f, g), expected, 1e-8));
  }
}

TEST(InnerProduct, ShapeMismatchThrows) {
  EXPECT_THROW(inner_product(MatrixSignal(2, 3), MatrixSignal(2, 4)), DimensionMismatch);
  EXPECT_THROW(inner_product(MatrixSignal(2, 3), MatrixSignal(3, 3)), DimensionMismatch);
}

TEST(Norms, ZeroSignal) {
  const MatrixSignal z(3, 2);
  EXPECT_EQ(norm_m(z), 0.0);
  EXPECT_EQ(norm_l2(z), 0.0);
}

TEST(Norms, IdentityCoefficient) {
  for (Index n : {1, 2, 3, 5}) {
    const auto f = MatrixSignal::canonical(n, 1, 0);
    EXPECT_NEAR(norm_m(f), std::pow(static_cast<double>(n), 0.25), 1e-15);
    EXPECT_NEAR(norm_l2(f), std::sqrt(static_cast<double>(n)), 1e-15);
  }
}

TEST(Norms, NormMComposesFromInnerProduct) {
  Rng rng(3);
  const auto f = rng.signal(3, 4);
  // explicit sum over coefficients, independent of the row-matrix storage
  CMatrix gram = CMatrix::Zero(3, 3);
  for (Index i = 0; i < f.m(); ++i) gram += f.coeff(i) * f.coeff(i).adjoint();
  EXPECT_NEAR(norm_m(f), std::sqrt(gram.norm()), 1e-13);
}

TEST(Norms, L2MatchesQuadrature) {
  const auto rule = oracle::gauss_legendre_newton(4096);
  Rng rng(5);
  const auto f = rng.signal(2, 3);
  EXPECT_NEAR(norm_l2(f), std::sqrt(oracle::integrate_energy(f.coeffs(), rule)), 1e-8);
}

TEST(ScalarInnerProduct, TraceOfGram) {
  const auto f = MatrixSignal::canonical(4, 1, 0);
  EXPECT_NEAR(std::abs(scalar_inner_product(f, f) - Complex(4.0)), 0.0, 1e-15);
}

TEST(ScalarInnerProduct, OrthogonalityCIsWeakerThanB) {
  CMatrix c(2, 2), d(2, 2);
  c << 1, 0, 0, 0;
  d << 0, 0, 1, 0;
  const MatrixSignal f(std::vector<CMatrix>{c});
  const MatrixSignal g(std::vector<CMatrix>{d});
  CMatrix expected(2, 2);
  expected << 0, 1, 0, 0;
  EXPECT_TRUE(MatrixNear(inner_product(f, g), expected, 0.0));
  EXPECT_EQ(scalar_inner_product(f, g), Complex(0.0));
  EXPECT_TRUE(is_orthogonal_c(f, g, 1e-12));
  EXPECT_FALSE(is_orthogonal_b(f, g, 1e-12));
}

TEST(Algebra, LeftMulIdentity) {
  Rng rng(8);
  const auto f = rng.signal(3, 2);
  EXPECT_EQ(left_mul(CMatrix::Identity(3, 3), f), f);
}

TEST(Algebra, RightMulActsPerCoefficient) {
  Rng rng(9);
  const auto f = rng.signal(2, 3);
  const CMatrix a = rng.matrix(2, 2);
  const auto g = right_mul(f, a);
  for (Index i = 0; i < 3; ++i) EXPECT_TRUE(MatrixNear(g.coeff(i), f.coeff(i) * a, 1e-14));
}

TEST(Algebra, AddNegationIsZero) {
  Rng rng(10);
  const auto f = rng.signal(2, 3);
  EXPECT_EQ(add(f, scale(-1.0, f)), MatrixSignal(2, 3));
}

TEST(Algebra, ModulePropertyOnRandomInputs) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + trial % 4;
    const auto f = rng.signal(n, 3);
    const auto g = rng.signal(n, 3);
    const CMatrix a = rng.matrix(n, n);
    const CMatrix b = rng.matrix(n, n);
    const CMatrix lhs = inner_product(left_mul(a, f), left_mul(b, g));
    const CMatrix rhs = a * inner_product(f, g) * b.adjoint();
    const double scale = a.norm() * b.norm() * norm_l2(f) * norm_l2(g);
    EXPECT_LE((lhs - rhs).norm(), 1e-12 * scale);
  }
}

TEST(Algebra, ConstantMatrixShapeChecked) {
  EXPECT_THROW(left_mul(CMatrix::Identity(3, 3), MatrixSignal(2, 1)), DimensionMismatch);
  EXPECT_THROW(right_mul(MatrixSignal(2, 1), CMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST(Orthogonality, CanonicalSignalsAreOrthonormal) {
  const auto fam = test::canonical_family(3, 4, 4);
  EXPECT_TRUE(is_orthonormal_set(fam.signals(), 1e-14));
  EXPECT_EQ(orthonormality_residual(fam.signals()), 0.0);
}

TEST(Orthogonality, SignalNotOrthogonalToItsLeftMultiple) {
  Rng rng(13);
  const auto f = rng.signal(3, 4);
  const CMatrix a = rng.full_rank(3);
  EXPECT_FALSE(is_orthogonal_b(f, left_mul(a, f), 1e-10));
}

TEST(Orthogonality, DegenerateNonzeroSignalNotSelfOrthogonal) {
  CMatrix c = CMatrix::Zero(2, 2);
  c(0, 0) = 1.0;
  const MatrixSignal f(std::vector<CMatrix>{c});
  EXPECT_FALSE(is_orthogonal_b(f, f, 1e-10));
}

TEST(Signal, FieldTagFollowsImaginaryParts) {
  Rng rng(14);
  EXPECT_EQ(rng.signal(2, 2, Field::Real).field(), Field::Real);
  EXPECT_EQ(rng.signal(2, 2, Field::Complex).field(), Field::Complex);
  EXPECT_EQ(rng.signal(2, 2, Field::Complex).real_part().field(), Field::Real);
}

TEST(Signal, ConstructionValidatesShapes) {
  EXPECT_THROW(MatrixSignal(0, 1), DimensionMismatch);
  EXPECT_THROW(MatrixSignal(std::vector<CMatrix>{}), DimensionMismatch);
  EXPECT_THROW(MatrixSignal(std::vector<CMatrix>{CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)}),
               DimensionMismatch);
  EXPECT_THROW(MatrixSignal::from_rows(CMatrix::Zero(2, 5), 2), DimensionMismatch);
  EXPECT_THROW(SignalFamily({MatrixSignal(2, 2), MatrixSignal(2, 3)}), DimensionMismatch);
}

// property sweeps

TEST(Properties, ConjugateSymmetryAndBilinearity) {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 4;
    const Index m = 1 + trial % 5;
    const auto f = rng.signal(n, m);
    const auto g = rng.signal(n, m);
    const auto h = rng.signal(n, m);
    const double s = norm_l2(f) * norm_l2(g);
    EXPECT_LE((inner_product(f, g) - inner_product(g, f).adjoint()).norm(), 1e-12 * s);
    const CMatrix lhs = inner_product(f + g, h);
    const CMatrix rhs = inner_product(f, h) + inner_product(g, h);
    EXPECT_LE((lhs - rhs).norm(), 1e-12 * (norm_l2(f) + norm_l2(g)) * norm_l2(h));
  }
}

TEST(Properties, NormEquivalenceBounds) {
  Rng rng(22);
  for (Index n : {1, 2, 3, 4, 8}) {
    const double lo = std::pow(static_cast<double>(n), -0.25);
    const double hi = std::sqrt(static_cast<double>(n));
    for (int trial = 0; trial < 1000; ++trial) {
      // mix generic and rank-one signals; rank one pushes toward the upper bound
      MatrixSignal f = rng.signal(n, 1 + trial % 4);
      if (trial % 3 == 0) f = left_mul(rng.of_rank(n, 1), f);
      const double nm = norm_m(f);
      const double nl = norm_l2(f);
      EXPECT_GE(nm, lo * nl * (1 - 1e-9));
      EXPECT_LE(nm, hi * nl * (1 + 1e-9));
      if (n == 1) EXPECT_NEAR(nm, nl, 1e-12 * nl);
    }
  }
}

TEST(Properties, BOrthogonalImpliesCOrthogonal) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 1 + trial % 3;
    // g = projection of a random signal off f: <g, f> = 0 exactly in theory
    const auto f = MatrixSignal::canonical(n, 3, 0);
    auto g = rng.signal(n, 3);
    g = g - left_mul(inner_product(g, f), f);
    ASSERT_TRUE(is_orthogonal_b(f, g, 1e-12));
    EXPECT_TRUE(is_orthogonal_c(f, g, 1e-12));
  }
}

TEST(Properties, DefinitenessOfSelfInnerProduct) {
  Rng rng(24);
  EXPECT_EQ(inner_product(MatrixSignal(3, 3), MatrixSignal(3, 3)).norm(), 0.0);
  for (int trial = 0; trial < 50; ++trial) {
    // sparse nonzero signal: one random entry
    MatrixSignal f(3, 3);
    CMatrix rows = f.rows();
    rows(rng.uniform_int(0, 2), rng.uniform_int(0, 8)) = Complex(rng.normal(), rng.normal());
    f = MatrixSignal::from_rows(rows, 3);
    EXPECT_GT(inner_product(f, f).norm(), 0.0);
  }
}

}  // namespace
}  // namespace mvsig
