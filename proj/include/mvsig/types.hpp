#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

namespace mvsig {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using IMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Result of a matrix-valued inner product <f,g>; an N x N complex matrix.
using GramMatrix = CMatrix;

/// Numerical thresholds shared by every module.
///
/// All checks that are exact equalities in the underlying algebra (rank,
/// orthogonality, Hermitian symmetry) go through one of these. Defaults are
/// tuned for double precision and N <= 64.
struct ToleranceConfig {
  double rank_rel_tol = 1e-10;   ///< eigenvalue cut-off relative to the largest eigenvalue
  double ortho_tol = 1e-10;      ///< orthogonality / orthonormality residual
  double hermitian_tol = 1e-12;  ///< ||P - P^H||_F relative to ||P||_F
  double psd_tol = 1e-12;        ///< negative eigenvalues above -psd_tol*||P||_F are clamped

  /// Throws std::invalid_argument when a field is negative or not finite.
  void validate() const;
};

}  // namespace mvsig
