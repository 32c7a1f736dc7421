#include "mvsig/random.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/gram_schmidt.hpp"
#include "mvsig/independence.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mvsig {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // rejection sampling for an unbiased draw
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

CMatrix Rng::matrix(Index rows, Index cols, Field field) {
  CMatrix a(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = field == Field::Complex ? normal() : 0.0;
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

CMatrix Rng::full_rank(Index n, Field field) {
  for (;;) {
    CMatrix a = matrix(n, n, field);
    const Eigen::JacobiSVD<CMatrix> svd(a);
    const auto& s = svd.singularValues();
    if (s[n - 1] > 0.0 && s[0] / s[n - 1] < 1e4) return a;
  }
}

CMatrix Rng::unitary(Index n, Field field) {
  const CMatrix a = matrix(n, n, field);
  const Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  // fix column phases so the distribution is Haar
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  if (field == Field::Real) q = q.real().cast<Complex>();
  return q;
}

CMatrix Rng::of_rank(Index n, Index rank, Field field) {
  if (rank < 0 || rank > n) throw std::invalid_argument("of_rank: rank out of range");
  if (rank == 0) return CMatrix::Zero(n, n);
  return matrix(n, rank, field) * matrix(rank, n, field);
}

MatrixSignal Rng::signal(Index n, Index m, Field field) {
  return MatrixSignal::from_rows(matrix(n, n * m, field), n);
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "independent") return FamilyKind::Independent;
  if (name == "orthonormal") return FamilyKind::Orthonormal;
  if (name == "degenerate") return FamilyKind::Degenerate;
  if (name == "dependent") return FamilyKind::Dependent;
  throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Independent: return "independent";
    case FamilyKind::Orthonormal: return "orthonormal";
    case FamilyKind::Degenerate: return "degenerate";
    case FamilyKind::Dependent: return "dependent";
  }
  return "unknown";
}

namespace {

SignalFamily random_independent(Rng& rng, Index n, Index m, std::size_t k, Field field,
                                const ToleranceConfig& cfg) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<MatrixSignal> members;
    for (std::size_t i = 0; i < k; ++i) members.push_back(rng.signal(n, m, field));
    SignalFamily fam(std::move(members));
    if (is_linearly_independent(fam, cfg).independent) return fam;
  }
  throw InfeasibleParameters("could not draw an independent family");
}

}  // namespace

SignalFamily gen_random_family(std::uint64_t seed, Index n, Index m, std::size_t k,
                               FamilyKind kind, Field field, const ToleranceConfig& cfg) {
  if (n < 1 || m < 1 || k < 1) throw InfeasibleParameters("n, m and k must be positive");
  Rng rng(seed);
  switch (kind) {
    case FamilyKind::Independent:
    case FamilyKind::Orthonormal: {
      if (m < static_cast<Index>(k)) {
        throw InfeasibleParameters("an independent family of " + std::to_string(k) +
                                   " signals needs m >= k (got m=" + std::to_string(m) + ")");
      }
      SignalFamily fam = random_independent(rng, n, m, k, field, cfg);
      if (kind == FamilyKind::Independent) return fam;
      return orthonormalize(fam, cfg).outputs();
    }
    case FamilyKind::Degenerate: {
      std::vector<MatrixSignal> members;
      CMatrix rows = rng.matrix(n, n * m, field);
      if (n == 1) {
        rows.setZero();
      } else {
        rows.row(1) = 3.0 * rows.row(0);
      }
      members.push_back(MatrixSignal::from_rows(std::move(rows), n));
      for (std::size_t i = 1; i < k; ++i) members.push_back(rng.signal(n, m, field));
      return SignalFamily(std::move(members));
    }
    case FamilyKind::Dependent: {
      if (k < 2) throw InfeasibleParameters("a dependent family needs k >= 2");
      const MatrixSignal f = rng.signal(n, m, field);
      const CMatrix a = rng.matrix(n, n, field);
      const CMatrix b = rng.matrix(n, n, field);
      std::vector<MatrixSignal> members{left_mul(a, f), left_mul(b, f)};
      for (std::size_t i = 2; i < k; ++i) members.push_back(rng.signal(n, m, field));
      return SignalFamily(std::move(members));
    }
  }
  throw InfeasibleParameters("unknown family kind");
}

}  // namespace mvsig
