#include "mvsig/linalg.hpp"

#include "mvsig/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mvsig {

namespace {

void require_square(const CMatrix& p, const char* op) {
  if (p.rows() != p.cols()) throw DimensionMismatch(std::string(op) + ": matrix must be square");
}

double rank_threshold(const EigenDecomposition& eig, const ToleranceConfig& cfg,
                      double scale_floor) {
  const double lmax = eig.eigenvalues.size() ? eig.eigenvalues.maxCoeff() : 0.0;
  return cfg.rank_rel_tol * std::max(lmax, scale_floor);
}

// Eigenvalues of a PSD matrix with roundoff negatives clamped to zero.
Eigen::VectorXd clamped_eigenvalues(const EigenDecomposition& eig, double frob,
                                    const ToleranceConfig& cfg) {
  Eigen::VectorXd lambda = eig.eigenvalues;
  for (Index i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < -cfg.psd_tol * frob) {
      std::ostringstream msg;
      msg << "matrix is indefinite: eigenvalue " << lambda[i] << " below -" << cfg.psd_tol
          << " * ||P||_F";
      throw IndefiniteMatrix(msg.str());
    }
    lambda[i] = std::max(lambda[i], 0.0);
  }
  return lambda;
}

CMatrix spectral_function(const EigenDecomposition& eig, const Eigen::VectorXd& values) {
  return eig.eigenvectors * values.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
}

EigenDecomposition checked_pd(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor,
                              const char* op) {
  EigenDecomposition eig = hermitian_eig(p, cfg);
  const double threshold = rank_threshold(eig, cfg, scale_floor);
  const double lmin = eig.eigenvalues.size() ? eig.eigenvalues.minCoeff() : 0.0;
  if (!(lmin > threshold)) {
    std::ostringstream msg;
    msg << op << ": matrix is singular (lambda_min = " << lmin << ", threshold = " << threshold
        << ")";
    throw SingularMatrix(msg.str());
  }
  return eig;
}

}  // namespace

double hermitian_defect(const CMatrix& p) { return (p - p.adjoint()).norm(); }

EigenDecomposition hermitian_eig(const CMatrix& p, const ToleranceConfig& cfg) {
  require_square(p, "hermitian_eig");
  const double defect = hermitian_defect(p);
  if (defect > cfg.hermitian_tol * std::max(1.0, p.norm())) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (||P - P^H||_F = " << defect << ")";
    throw NotHermitian(msg.str());
  }
  const CMatrix h = 0.5 * (p + p.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix herm_sqrt(const CMatrix& p, const ToleranceConfig& cfg) {
  const EigenDecomposition eig = hermitian_eig(p, cfg);
  const Eigen::VectorXd lambda = clamped_eigenvalues(eig, p.norm(), cfg);
  return spectral_function(eig, lambda.cwiseSqrt());
}

CMatrix herm_inv_sqrt(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor) {
  const EigenDecomposition eig = checked_pd(p, cfg, scale_floor, "herm_inv_sqrt");
  return spectral_function(eig, eig.eigenvalues.cwiseSqrt().cwiseInverse());
}

CMatrix herm_inv(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor) {
  const EigenDecomposition eig = checked_pd(p, cfg, scale_floor, "herm_inv");
  return spectral_function(eig, eig.eigenvalues.cwiseInverse());
}

Index rank_tol(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor) {
  const EigenDecomposition eig = hermitian_eig(p, cfg);
  const double threshold = rank_threshold(eig, cfg, scale_floor);
  if (threshold <= 0.0) return 0;
  return (eig.eigenvalues.array() > threshold).count();
}

CMatrix null_space_basis(const CMatrix& p, const ToleranceConfig& cfg, double scale_floor) {
  const EigenDecomposition eig = hermitian_eig(p, cfg);
  const double threshold = rank_threshold(eig, cfg, scale_floor);
  // eigenvalues ascend, so the null space is a leading block of columns
  Index nullity = 0;
  if (threshold <= 0.0) {
    nullity = p.rows();
  } else {
    while (nullity < eig.eigenvalues.size() && eig.eigenvalues[nullity] <= threshold) ++nullity;
  }
  return eig.eigenvectors.leftCols(nullity);
}

bool null_space_included(const CMatrix& a, const CMatrix& null_p, const ToleranceConfig& cfg) {
  require_square(a, "null_space_included");
  if (null_p.cols() == 0) return true;
  if (null_p.rows() != a.rows()) {
    throw DimensionMismatch("null_space_included: null-space basis has the wrong length");
  }
  const double limit = cfg.rank_rel_tol * std::max(1.0, a.norm());
  const CMatrix image = a.adjoint() * null_p;
  for (Index j = 0; j < image.cols(); ++j) {
    if (image.col(j).norm() > limit) return false;
  }
  return true;
}

}  // namespace mvsig
