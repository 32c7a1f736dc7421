#include "mvsig/verification.hpp"

#include "mvsig/errors.hpp"
#include "mvsig/gram_schmidt.hpp"
#include "mvsig/independence.hpp"
#include "mvsig/lattice.hpp"
#include "mvsig/random.hpp"

#include <algorithm>
#include <cmath>

namespace mvsig {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

constexpr double kAxiomTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kSpanTol = 1e-8;

CheckResult bounded(std::string name, double value, double threshold) {
  return {std::move(name), value <= threshold, value, threshold, {}};
}

CheckResult flag(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)};
}

}  // namespace

VerificationReport verify_family(const SignalFamily& fam, const Claims& claims,
                                 const ToleranceConfig& cfg, std::uint64_t seed) {
  VerificationReport report;
  auto& out = report.checks;
  const std::size_t K = fam.size();
  const Index n = fam.n();
  Rng rng(seed);

  // inner-product axioms over all ordered pairs
  double conj_sym = 0.0;
  double module = 0.0;
  for (std::size_t a = 0; a < K; ++a) {
    for (std::size_t b = 0; b < K; ++b) {
      const double scale = std::max(1e-300, norm_l2(fam[a]) * norm_l2(fam[b]));
      const CMatrix fg = inner_product(fam[a], fam[b]);
      conj_sym = std::max(conj_sym, (fg - inner_product(fam[b], fam[a]).adjoint()).norm() / scale);
      const CMatrix A = rng.matrix(n, n);
      const CMatrix B = rng.matrix(n, n);
      const CMatrix lhs = inner_product(left_mul(A, fam[a]), left_mul(B, fam[b]));
      const double s2 = scale * A.norm() * B.norm();
      module = std::max(module, (lhs - A * fg * B.adjoint()).norm() / s2);
    }
  }
  out.push_back(bounded("conjugate_symmetry", conj_sym, kAxiomTol));
  out.push_back(bounded("left_module_property", module, kAxiomTol));

  bool definite = true;
  double equivalence_violation = 0.0;
  bool rows_agree = true;
  for (const auto& f : fam) {
    const bool zero = f.rows().isZero(0.0);
    definite = definite && (zero == (inner_product(f, f).norm() == 0.0));
    const double nm = norm_m(f);
    const double nl = norm_l2(f);
    const double lo = std::pow(static_cast<double>(n), -0.25) * nl;
    const double hi = std::sqrt(static_cast<double>(n)) * nl;
    if (nl > 0.0) {
      equivalence_violation = std::max({equivalence_violation, (lo - nm) / nl, (nm - hi) / nl});
    }
    rows_agree = rows_agree && is_degenerate(f, cfg) == rows_linearly_dependent(f, cfg);
  }
  out.push_back(flag("definiteness", definite));
  out.push_back(bounded("norm_equivalence", equivalence_violation, kIdentityTol));
  out.push_back(flag("degenerate_iff_rows_dependent", rows_agree));

  const IndependenceReport ind = is_linearly_independent(fam, cfg);
  if (ind.independent) {
    bool all_nondegenerate = true;
    for (const auto& f : fam) all_nondegenerate = all_nondegenerate && !is_degenerate(f, cfg);
    out.push_back(flag("independent_members_nondegenerate", all_nondegenerate));

    try {
      const GramSchmidtResult on = orthonormalize(fam, cfg);
      const SignalFamily& g = on.outputs();
      out.push_back(bounded("gram_schmidt_orthonormality", orthonormality_residual(g.signals()),
                            cfg.ortho_tol));
      double scale = 1.0;
      for (const auto& f : fam) scale = std::max(scale, norm_l2(f));
      out.push_back(bounded("gram_schmidt_span", span_residual(fam, g) / scale, kSpanTol));
      double parseval = 0.0;
      for (const auto& f : fam) {
        parseval = std::max(parseval, parseval_residual(f, g, cfg) /
                                          std::max(1e-300, inner_product(f, f).norm()));
      }
      out.push_back(bounded("parseval", parseval, kIdentityTol));

      const GramSchmidtResult og = orthogonalize(fam, cfg);
      double gram_scale = 0.0;
      for (const auto& f : fam) gram_scale = std::max(gram_scale, inner_product(f, f).norm());
      out.push_back(
          bounded("orthogonalization_gram_identity", gram_identity_residual(fam, og) / gram_scale,
                  kIdentityTol));
      out.push_back(flag("orthogonalization_norm_bounds", norm_inequality_holds(fam, og)));

      if (fam.field() == Field::Real) {
        const MatrixLattice lat = MatrixLattice::create(fam, cfg);
        double product = 1.0;
        for (double s : og.step_norms) product *= s;
        out.push_back(bounded("lattice_determinant",
                              std::abs(lat.determinant() - product) / product, 1e-10));
      }
    } catch (const Error& e) {
      out.push_back(flag("gram_schmidt_completes", false, e.what()));
    }
  } else {
    out.push_back(flag("dependence_witness", ind.witness.has_value(),
                       "no violating coefficient witness constructed"));
    bool rejected = false;
    try {
      (void)orthonormalize(fam, cfg);
    } catch (const DegenerateStep&) {
      rejected = true;
    }
    out.push_back(flag("gram_schmidt_rejects_dependent", rejected));
  }

  if (claims.orthonormal) {
    const double r = orthonormality_residual(fam.signals());
    const bool holds = r <= cfg.ortho_tol;
    out.push_back({"claim_orthonormal", holds == *claims.orthonormal, r, cfg.ortho_tol, {}});
  }
  if (claims.independent) {
    out.push_back(flag("claim_independent", ind.independent == *claims.independent));
  }
  for (std::size_t idx : claims.degenerate_members) {
    const bool ok = idx < K && is_degenerate(fam[idx], cfg);
    out.push_back(flag("claim_degenerate_member_" + std::to_string(idx), ok));
  }
  return report;
}

}  // namespace mvsig
