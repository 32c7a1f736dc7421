#pragma once

// Hermitian matrix functions used by orthonormalization and the
// independence tests. Everything routes through one eigendecomposition so
// rank decisions, square roots and null spaces agree with each other.
//
// Functions taking a `scale_floor` measure eigenvalues against
// max(lambda_max(P), scale_floor) instead of lambda_max(P) alone. Callers
// pass the magnitude of the quantities P was assembled from, so that a
// matrix which is pure cancellation noise is reported as zero rather than
// as "full rank relative to itself".

#include "mvsig/types.hpp"

namespace mvsig {

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // unitary, columns match eigenvalues
};

/// ||P - P^H||_F.
double hermitian_defect(const CMatrix& p);

/// Eigendecomposition of the Hermitian part of P.
/// Throws NotHermitian if ||P - P^H||_F > hermitian_tol * max(1, ||P||_F).
EigenDecomposition hermitian_eig(const CMatrix& p, const ToleranceConfig& cfg);

/// Principal PSD square root. Eigenvalues in [-psd_tol*||P||_F, 0) are
/// clamped to zero; anything more negative raises IndefiniteMatrix.
CMatrix herm_sqrt(const CMatrix& p, const ToleranceConfig& cfg);

/// P^{-1/2} for Hermitian positive definite P. Raises SingularMatrix unless
/// lambda_min > rank_rel_tol * max(lambda_max, scale_floor).
CMatrix herm_inv_sqrt(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor = 0.0);

/// P^{-1} with the same guard as herm_inv_sqrt.
CMatrix herm_inv(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor = 0.0);

/// Number of eigenvalues above rank_rel_tol * max(lambda_max, scale_floor);
/// zero when that reference is zero.
Index rank_tol(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor = 0.0);

/// Orthonormal columns spanning the eigenvectors not counted by rank_tol.
/// An N x 0 matrix when P has full rank.
CMatrix null_space_basis(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor = 0.0);

/// True iff null(P) is contained in null(A^H), i.e.
/// ||A^H u|| <= rank_rel_tol * max(1, ||A||_F) for every column u of null_p.
bool null_space_included(const CMatrix& a, const CMatrix& null_p, const ToleranceConfig& cfg);

}  // namespace mvsig
