#include "mvsig/gram_schmidt.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/independence.hpp"
#include "mvsig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mvsig {

namespace {

double spectral_radius(const CMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

void maybe_check_upfront(const SignalFamily& fam, const ToleranceConfig& cfg,
                         const GramSchmidtOptions& opts) {
  if (!opts.check_independence_upfront) return;
  IndependenceReport report = is_linearly_independent(fam, cfg);
  if (!report.independent) throw NotIndependent(std::move(report));
}

MatrixSignal project_out(const MatrixSignal& f, std::span<const CMatrix> coeffs,
                         std::span<const MatrixSignal> basis) {
  if (basis.empty()) return f;
  return f - combine(coeffs, basis);
}

// Real inputs give real outputs in exact arithmetic; drop roundoff imaginary parts.
void make_real(GramSchmidtResult& r) {
  r.ortho = r.ortho->real_part();
  for (CoefficientTable* table : {&r.mu, &r.projections}) {
    for (std::size_t l = 0; l < table->size(); ++l) {
      for (std::size_t k = 0; k < table->size(); ++k) {
        CMatrix& c = (*table)(l, k);
        c = c.real().cast<Complex>();
      }
    }
  }
}

}  // namespace

CoefficientTable::CoefficientTable(std::size_t k, Index n)
    : k_(k), entries_(k * k, CMatrix::Zero(n, n)) {}

GramSchmidtResult orthonormalize(const SignalFamily& fam, const ToleranceConfig& cfg,
                                 const GramSchmidtOptions& opts) {
  maybe_check_upfront(fam, cfg, opts);
  const std::size_t K = fam.size();
  const Index n = fam.n();

  GramSchmidtResult result;
  result.mode = GramSchmidtMode::Orthonormalize;
  result.projections = CoefficientTable(K, n);
  result.step_norms.resize(K);
  result.reorthogonalized.assign(K, false);

  std::vector<MatrixSignal> g;
  g.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double input_scale = spectral_radius(inner_product(fam[k], fam[k]));
    std::vector<CMatrix> r(k);
    for (std::size_t l = 0; l < k; ++l) r[l] = inner_product(fam[k], g[l]);
    MatrixSignal residual = project_out(fam[k], r, g);

    auto normalize = [&](const MatrixSignal& v) {
      const CMatrix p = inner_product(v, v);
      try {
        return herm_inv_sqrt(p, cfg, input_scale);
      } catch (const SingularMatrix& e) {
        throw DegenerateStep(k, e.what());
      }
    };
    CMatrix t = normalize(residual);
    MatrixSignal gk = left_mul(t, residual);

    double worst = 0.0;
    for (std::size_t l = 0; l < k; ++l) worst = std::max(worst, inner_product(gk, g[l]).norm());
    if (worst > cfg.ortho_tol && opts.allow_reorthogonalization) {
      std::vector<CMatrix> delta(k);
      for (std::size_t l = 0; l < k; ++l) {
        delta[l] = inner_product(residual, g[l]);
        r[l] += delta[l];
      }
      residual = project_out(residual, delta, g);
      t = normalize(residual);
      gk = left_mul(t, residual);
      result.reorthogonalized[k] = true;
    }

    const CMatrix p = inner_product(residual, residual);
    for (std::size_t l = 0; l < k; ++l) result.projections(l, k) = r[l];
    result.projections(k, k) = herm_sqrt(p, cfg);
    result.step_norms[k] = std::sqrt(p.norm());
    g.push_back(std::move(gk));
  }
  result.ortho = SignalFamily(std::move(g));
  if (fam.field() == Field::Real) make_real(result);
  return result;
}

GramSchmidtResult orthogonalize(const SignalFamily& fam, const ToleranceConfig& cfg,
                                const GramSchmidtOptions& opts) {
  maybe_check_upfront(fam, cfg, opts);
  const std::size_t K = fam.size();
  const Index n = fam.n();

  GramSchmidtResult result;
  result.mode = GramSchmidtMode::Orthogonalize;
  result.mu = CoefficientTable(K, n);
  result.step_norms.resize(K);
  result.reorthogonalized.assign(K, false);

  std::vector<MatrixSignal> fhat;
  std::vector<CMatrix> inv_gram;  // <f^_l, f^_l>^{-1}
  fhat.reserve(K);
  inv_gram.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double input_scale = spectral_radius(inner_product(fam[k], fam[k]));
    std::vector<CMatrix> mu(k);
    for (std::size_t l = 0; l < k; ++l) mu[l] = inner_product(fam[k], fhat[l]) * inv_gram[l];
    MatrixSignal v = project_out(fam[k], mu, fhat);

    if (opts.allow_reorthogonalization && k > 0) {
      const double vk = norm_m(v);
      bool clean = true;
      for (std::size_t l = 0; l < k && clean; ++l) {
        clean = inner_product(v, fhat[l]).norm() <= cfg.ortho_tol * vk * result.step_norms[l];
      }
      if (!clean) {
        std::vector<CMatrix> delta(k);
        for (std::size_t l = 0; l < k; ++l) {
          delta[l] = inner_product(v, fhat[l]) * inv_gram[l];
          mu[l] += delta[l];
        }
        v = project_out(v, delta, fhat);
        result.reorthogonalized[k] = true;
      }
    }

    const CMatrix p = inner_product(v, v);
    try {
      inv_gram.push_back(herm_inv(p, cfg, input_scale));
    } catch (const SingularMatrix& e) {
      throw DegenerateStep(k, e.what());
    }
    for (std::size_t l = 0; l < k; ++l) result.mu(l, k) = mu[l];
    result.step_norms[k] = std::sqrt(p.norm());
    fhat.push_back(std::move(v));
  }
  result.ortho = SignalFamily(std::move(fhat));
  if (fam.field() == Field::Real) make_real(result);
  return result;
}

std::vector<CMatrix> expand(const MatrixSignal& f, const SignalFamily& basis,
                            const ToleranceConfig& cfg) {
  if (!f.same_shape(basis[0])) throw DimensionMismatch("expand: signal and basis shapes differ");
  const double residual = orthonormality_residual(basis.signals());
  if (residual > cfg.ortho_tol) {
    throw NotOrthonormal("expand: basis orthonormality residual " + std::to_string(residual) +
                         " exceeds ortho_tol");
  }
  std::vector<CMatrix> coeffs;
  coeffs.reserve(basis.size());
  for (const auto& phi : basis) coeffs.push_back(inner_product(f, phi));
  return coeffs;
}

MatrixSignal reconstruct(std::span<const CMatrix> coeffs, const SignalFamily& basis) {
  return combine(coeffs, basis.signals());
}

double parseval_residual(const MatrixSignal& f, const SignalFamily& basis,
                         const ToleranceConfig& cfg) {
  const std::vector<CMatrix> coeffs = expand(f, basis, cfg);
  CMatrix d = inner_product(f, f);
  for (const auto& c : coeffs) d -= c * c.adjoint();
  return d.norm();
}

double span_residual(const SignalFamily& inputs, const SignalFamily& orthonormal) {
  if (inputs.size() != orthonormal.size() || !inputs[0].same_shape(orthonormal[0])) {
    throw DimensionMismatch("span_residual: families differ in shape");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    std::vector<CMatrix> coeffs;
    for (std::size_t l = 0; l <= k; ++l) coeffs.push_back(inner_product(inputs[k], orthonormal[l]));
    const MatrixSignal approx =
        combine(coeffs, orthonormal.signals().subspan(0, k + 1));
    worst = std::max(worst, norm_l2(inputs[k] - approx));
  }
  return worst;
}

double gram_identity_residual(const SignalFamily& inputs, const GramSchmidtResult& gs) {
  if (gs.mode != GramSchmidtMode::Orthogonalize) {
    throw std::invalid_argument("gram_identity_residual needs an orthogonalize result");
  }
  const SignalFamily& fhat = gs.outputs();
  double worst = 0.0;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    CMatrix d = inner_product(inputs[k], inputs[k]) - inner_product(fhat[k], fhat[k]);
    for (std::size_t l = 0; l < k; ++l) {
      d -= gs.mu(l, k) * inner_product(fhat[l], fhat[l]) * gs.mu(l, k).adjoint();
    }
    worst = std::max(worst, d.norm());
  }
  return worst;
}

bool norm_inequality_holds(const SignalFamily& inputs, const GramSchmidtResult& gs, double slack) {
  if (gs.mode != GramSchmidtMode::Orthogonalize) {
    throw std::invalid_argument("norm_inequality_holds needs an orthogonalize result");
  }
  const SignalFamily& fhat = gs.outputs();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const double fk2 = inner_product(inputs[k], inputs[k]).norm();
    const double hk2 = inner_product(fhat[k], fhat[k]).norm();
    double bound = hk2;
    for (std::size_t l = 0; l < k; ++l) {
      bound += gs.mu(l, k).squaredNorm() * inner_product(fhat[l], fhat[l]).norm();
    }
    if (fk2 > bound * (1.0 + slack)) return false;
    if (std::sqrt(fk2) < std::sqrt(hk2) * (1.0 - slack)) return false;
  }
  return true;
}

}  // namespace mvsig
