#include "constructions.hpp"
#include "mvsig/errors.hpp"
#include "mvsig/independence.hpp"
#include "mvsig/lattice.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

namespace mvsig {
namespace {

using test::MatrixNear;

const ToleranceConfig kCfg{};

SignalFamily real_basis(Rng& rng, Index n, std::size_t k) {
  return test::generic_family(rng, n, k, 1, Field::Real);
}

std::vector<IMatrix> random_coeffs(Rng& rng, Index n, std::size_t k, std::int64_t bound) {
  std::vector<IMatrix> out;
  for (std::size_t i = 0; i < k; ++i) {
    IMatrix c(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index s = 0; s < n; ++s) c(r, s) = rng.uniform_int(-bound, bound);
    out.push_back(c);
  }
  return out;
}

std::vector<std::int64_t> key(const std::vector<IMatrix>& coeffs) {
  std::vector<std::int64_t> out;
  for (const auto& c : coeffs)
    for (Index r = 0; r < c.rows(); ++r)
      for (Index s = 0; s < c.cols(); ++s) out.push_back(c(r, s));
  return out;
}

TEST(LatticeNew, OrthonormalBasisDeterminant) {
  for (Index n : {1, 2, 3}) {
    for (std::size_t k : {1u, 2u, 4u}) {
      const auto lat = lattice_new(test::canonical_family(n, 5, k), kCfg);
      EXPECT_NEAR(lat.determinant(), std::pow(double(n), k / 4.0), 1e-10 * lat.determinant());
    }
  }
}

TEST(LatticeNew, SingleMemberDeterminantIsNorm) {
  Rng rng(1);
  const auto f = rng.signal(3, 2, Field::Real);
  EXPECT_NEAR(lattice_new(SignalFamily({f}), kCfg).determinant(), norm_m(f), 1e-14);
}

TEST(LatticeNew, DeterminantMatchesRecomputedOrthogonalization) {
  Rng rng(2);
  const auto basis = real_basis(rng, 2, 3);
  const auto lat = lattice_new(basis, kCfg);
  // classical recursion written out from scratch
  std::vector<MatrixSignal> hats;
  double det = 1.0;
  for (const auto& f : basis) {
    MatrixSignal h = f;
    for (const auto& prev : hats) {
      const CMatrix mu = inner_product(f, prev) * inner_product(prev, prev).inverse();
      h = h - left_mul(mu, prev);
    }
    det *= norm_m(h);
    hats.push_back(h);
  }
  EXPECT_NEAR(lat.determinant(), det, 1e-10 * det);
  double prod = 1.0;
  for (double s : lat.gs().step_norms) prod *= s;
  EXPECT_NEAR(lat.determinant(), prod, 1e-10 * prod);
}

TEST(LatticeNew, OrthogonalBasisDeterminantIsProductOfNorms) {
  // orthogonal real basis: distinct canonical slots with real full-rank factors
  Rng rng(3);
  std::vector<MatrixSignal> members;
  double prod = 1.0;
  for (Index k = 0; k < 3; ++k) {
    const auto f = left_mul(rng.full_rank(2, Field::Real), MatrixSignal::canonical(2, 4, k));
    prod *= norm_m(f);
    members.push_back(f);
  }
  const auto lat = lattice_new(SignalFamily(members), kCfg);
  EXPECT_NEAR(lat.determinant(), prod, 1e-12 * prod);
  EXPECT_LE(verify_gram_identity(lat), 1e-12);
}

TEST(LatticeNew, RejectsComplexAndDependent) {
  Rng rng(4);
  EXPECT_THROW(lattice_new(test::random_family(rng, 2, 3, 2), kCfg), NotReal);
  const auto f = rng.signal(2, 3, Field::Real);
  const SignalFamily dep({f, left_mul(rng.matrix(2, 2, Field::Real), f)});
  try {
    lattice_new(dep, kCfg);
    FAIL() << "expected NotIndependent";
  } catch (const NotIndependent& e) {
    EXPECT_FALSE(e.report().independent);
  }
}

TEST(Point, Examples) {
  Rng rng(5);
  const auto lat = lattice_new(real_basis(rng, 2, 3), kCfg);
  std::vector<IMatrix> zero(3, IMatrix::Zero(2, 2));
  EXPECT_EQ(point(lat, zero).signal, MatrixSignal(2, 4));
  auto unit = zero;
  unit[0] = IMatrix::Identity(2, 2);
  EXPECT_TRUE(MatrixNear(point(lat, unit).signal.rows(), lat.basis()[0].rows(), 0.0));
}

TEST(Point, GroupLaw) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + trial % 3;
    const std::size_t k = 1 + trial % 4;
    const auto lat = lattice_new(real_basis(rng, n, k), kCfg);
    const auto a = random_coeffs(rng, n, k, 5);
    const auto b = random_coeffs(rng, n, k, 5);
    std::vector<IMatrix> sum, neg;
    for (std::size_t i = 0; i < k; ++i) {
      sum.push_back(a[i] + b[i]);
      neg.push_back(-a[i]);
    }
    const auto pa = point(lat, a).signal;
    const auto pb = point(lat, b).signal;
    const double scale = std::max(1.0, norm_l2(pa) + norm_l2(pb));
    EXPECT_LE(norm_l2(pa + pb - point(lat, sum).signal), 1e-12 * scale);
    EXPECT_LE(norm_l2(pa + point(lat, neg).signal), 1e-12 * scale);
  }
}

TEST(Point, ValidatesCoefficients) {
  Rng rng(7);
  const auto lat = lattice_new(real_basis(rng, 2, 2), kCfg);
  std::vector<RMatrix> real(2, RMatrix::Zero(2, 2));
  real[1](0, 1) = 3.0;
  EXPECT_EQ(point_from_real(lat, real).coeffs[1](0, 1), 3);
  real[1](0, 1) = 0.5;
  EXPECT_THROW(point_from_real(lat, real), NonIntegerCoefficient);
  std::vector<IMatrix> short_coeffs(1, IMatrix::Zero(2, 2));
  EXPECT_THROW(point(lat, short_coeffs), DimensionMismatch);
  std::vector<IMatrix> bad_shape(2, IMatrix::Zero(3, 3));
  EXPECT_THROW(point(lat, bad_shape), DimensionMismatch);
}

TEST(Enumerate, Counts) {
  Rng rng(8);
  const auto l11 = lattice_new(real_basis(rng, 1, 1), kCfg);
  ASSERT_EQ(enumerate_points(l11, 0).size(), 1u);
  EXPECT_EQ(norm_l2(enumerate_points(l11, 0)[0].signal), 0.0);
  const auto five = enumerate_points(l11, 2);
  ASSERT_EQ(five.size(), 5u);
  for (std::int64_t i = 0; i < 5; ++i) EXPECT_EQ(five[i].coeffs[0](0, 0), i - 2);

  const auto l21 = lattice_new(real_basis(rng, 1, 2), kCfg);
  const auto nine = enumerate_points(l21, 1);
  ASSERT_EQ(nine.size(), 9u);
  for (std::size_t i = 0; i < nine.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) EXPECT_GT(norm_l2(nine[i].signal - nine[j].signal), 1e-8);
}

TEST(Enumerate, CountFormulaNoDuplicatesLexicographic) {
  Rng rng(9);
  for (auto [k, n, b] : std::vector<std::tuple<std::size_t, Index, std::int64_t>>{
           {1, 1, 3}, {2, 1, 2}, {1, 2, 1}, {2, 2, 1}}) {
    const auto lat = lattice_new(real_basis(rng, n, k), kCfg);
    const auto pts = enumerate_points(lat, b);
    const auto expected = static_cast<std::size_t>(std::pow(2 * b + 1, double(k * n * n)));
    EXPECT_EQ(pts.size(), expected);
    EXPECT_EQ(enumeration_count(lat, b), expected);
    std::set<std::vector<std::int64_t>> keys;
    for (const auto& p : pts) keys.insert(key(p.coeffs));
    EXPECT_EQ(keys.size(), expected);
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(key(pts[i - 1].coeffs), key(pts[i].coeffs));
  }
}

TEST(Enumerate, CapExceeded) {
  Rng rng(10);
  const auto lat = lattice_new(real_basis(rng, 3, 2), kCfg);
  EXPECT_THROW(enumeration_count(lat, 10), CapExceeded);
  EXPECT_THROW(enumerate_points(lat, 10), CapExceeded);
  EXPECT_THROW(nearest_point_bruteforce(lat, MatrixSignal(3, 3), 10), CapExceeded);
  EXPECT_THROW(enumerate_points(lat, 1, 100), CapExceeded);
  // huge bounds must not overflow into a small count
  EXPECT_THROW(enumeration_count(lat, std::numeric_limits<std::int64_t>::max() / 4), CapExceeded);
}

TEST(Nearest, Examples) {
  Rng rng(11);
  const auto lat = lattice_new(real_basis(rng, 2, 2), kCfg);
  const auto zero = nearest_point_bruteforce(lat, MatrixSignal(2, 3), 1);
  EXPECT_EQ(zero.distance, 0.0);
  for (const auto& c : zero.point.coeffs) EXPECT_EQ(c, IMatrix::Zero(2, 2));
  const auto coeffs = random_coeffs(rng, 2, 2, 1);
  const auto hit = nearest_point_bruteforce(lat, point(lat, coeffs).signal, 1);
  EXPECT_LE(hit.distance, 1e-10);
  EXPECT_EQ(hit.point.coeffs, coeffs);
}

TEST(Nearest, MatchesIndependentScan) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto basis = real_basis(rng, 1, 2);
    const auto lat = lattice_new(basis, kCfg);
    const auto target = left_mul(CMatrix::Constant(1, 1, 4.0), rng.signal(1, 3, Field::Real));
    // nested loops over the two scalar coefficients, distance from <d,d>
    double best = std::numeric_limits<double>::infinity();
    std::int64_t best_a = 0, best_b = 0;
    for (std::int64_t a = -3; a <= 3; ++a) {
      for (std::int64_t b = -3; b <= 3; ++b) {
        const CMatrix rows = target.rows() - double(a) * basis[0].rows() - double(b) * basis[1].rows();
        const double d = std::sqrt((rows * rows.adjoint()).norm());
        if (d < best) {
          best = d;
          best_a = a;
          best_b = b;
        }
      }
    }
    const auto got = nearest_point_bruteforce(lat, target, 3);
    EXPECT_NEAR(got.distance, best, 1e-12 * std::max(1.0, best));
    EXPECT_EQ(got.point.coeffs[0](0, 0), best_a);
    EXPECT_EQ(got.point.coeffs[1](0, 0), best_b);
  }
}

TEST(Nearest, RecoversEveryPointInsideShrunkenBox) {
  Rng rng(13);
  const auto lat = lattice_new(real_basis(rng, 1, 2), kCfg);
  const std::int64_t bound = 2;
  for (const auto& p : enumerate_points(lat, bound - 1)) {
    const auto got = nearest_point_bruteforce(lat, p.signal, bound);
    EXPECT_LE(got.distance, 1e-10);
    EXPECT_EQ(got.point.coeffs, p.coeffs);
  }
}

TEST(Nearest, TiesGoToLexicographicallyFirst) {
  // target halfway between 0 and f_1
  const auto lat = lattice_new(test::canonical_family(1, 1, 1), kCfg);
  std::vector<CMatrix> half{CMatrix::Constant(1, 1, 0.5)};
  const auto got = nearest_point_bruteforce(lat, MatrixSignal(half), 2);
  EXPECT_EQ(got.point.coeffs[0](0, 0), 0);
}

TEST(LatticeIdentities, RandomLattices) {
  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + trial % 3;
    const std::size_t k = 1 + trial % 5;
    const auto lat = lattice_new(real_basis(rng, n, k), kCfg);
    double scale = 0.0;
    for (const auto& f : lat.basis()) scale = std::max(scale, inner_product(f, f).norm());
    EXPECT_LE(verify_gram_identity(lat), 1e-9 * scale);
    EXPECT_TRUE(verify_norm_inequality(lat));
    EXPECT_GT(lat.determinant(), 0.0);
  }
}

}  // namespace
}  // namespace mvsig
