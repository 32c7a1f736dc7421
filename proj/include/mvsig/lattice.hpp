#pragma once

// Matrix-valued lattices: integer-matrix combinations sum_k F_k f_k of a real,
// linearly independent basis family. The determinant is the product of the
// ||.||_M norms of the Gram-Schmidt orthogonalized basis.
//
// A fundamental region is any set whose lattice translates partition the real
// span of the basis. No construction of one is provided, and there is no basis
// reduction; enumeration and closest-point search are exhaustive over a box of
// integer coefficients.

#include "mvsig/family.hpp"
#include "mvsig/gram_schmidt.hpp"
#include "mvsig/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mvsig {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class MatrixLattice {
 public:
  /// Throws NotReal for a complex basis and NotIndependent (carrying the
  /// report) for a dependent one.
  static MatrixLattice create(SignalFamily basis, const ToleranceConfig& cfg = {});

  const SignalFamily& basis() const noexcept { return basis_; }
  const GramSchmidtResult& gs() const noexcept { return gs_; }
  double determinant() const noexcept { return determinant_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  Index n() const noexcept { return basis_.n(); }

 private:
  MatrixLattice(SignalFamily basis, GramSchmidtResult gs, double det)
      : basis_(std::move(basis)), gs_(std::move(gs)), determinant_(det) {}

  SignalFamily basis_;
  GramSchmidtResult gs_;
  double determinant_;
};

inline MatrixLattice lattice_new(SignalFamily basis, const ToleranceConfig& cfg = {}) {
  return MatrixLattice::create(std::move(basis), cfg);
}

struct LatticePoint {
  std::vector<IMatrix> coeffs;
  MatrixSignal signal;
};

LatticePoint point(const MatrixLattice& lat, std::span<const IMatrix> coeffs);

/// Same as point() for real-typed input; throws NonIntegerCoefficient if an
/// entry is not an integer.
LatticePoint point_from_real(const MatrixLattice& lat, std::span<const RMatrix> coeffs);

/// (2*bound+1)^(K*N^2). Throws CapExceeded when it exceeds cap.
std::uint64_t enumeration_count(const MatrixLattice& lat, std::int64_t bound,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Streams every lattice point whose integer coefficients lie in
/// [-bound, bound], in lexicographic order of the flattened coefficients
/// (basis index, then row, then column; last position fastest).
class PointEnumerator {
 public:
  PointEnumerator(const MatrixLattice& lat, std::int64_t bound,
                  std::uint64_t cap = kDefaultEnumerationCap);

  std::optional<LatticePoint> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  const MatrixLattice* lat_;
  std::int64_t bound_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  std::vector<std::int64_t> digits_;
};

std::vector<LatticePoint> enumerate_points(const MatrixLattice& lat, std::int64_t bound,
                                           std::uint64_t cap = kDefaultEnumerationCap);

struct NearestPoint {
  LatticePoint point;
  double distance;
};

/// Enumerated point minimizing ||target - p||_M; the lexicographically first
/// wins ties.
NearestPoint nearest_point_bruteforce(const MatrixLattice& lat, const MatrixSignal& target,
                                      std::int64_t bound,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// Largest residual of <f_k,f_k> = <f^_k,f^_k> + sum_{l<k} mu <f^_l,f^_l> mu^H.
double verify_gram_identity(const MatrixLattice& lat);

/// The per-step norm bound and ||f_k|| >= ||f^_k||, with 1e-9 relative slack.
bool verify_norm_inequality(const MatrixLattice& lat);

}  // namespace mvsig
