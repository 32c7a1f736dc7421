#pragma once

// Gram-Schmidt with matrix coefficients. Projection coefficients always
// multiply from the left:
//
//   orthonormalize:  g^_k = f_k - sum_{l<k} <f_k, g_l> g_l,
//                    g_k  = <g^_k, g^_k>^{-1/2} g^_k
//   orthogonalize:   f^_k = f_k - sum_{l<k} mu(l,k) f^_l,
//                    mu(l,k) = <f_k, f^_l> <f^_l, f^_l>^{-1}
//
// Both are classical Gram-Schmidt. A step whose result fails the
// orthogonality check against earlier outputs gets one more projection pass;
// the coefficient tables absorb the correction so f_k is still reproduced
// exactly by the returned coefficients.

#include "mvsig/family.hpp"
#include "mvsig/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mvsig {

enum class GramSchmidtMode { Orthonormalize, Orthogonalize };

/// Square K x K table of N x N matrices, addressed as (l, k).
class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(std::size_t k, Index n);

  std::size_t size() const noexcept { return k_; }
  bool empty() const noexcept { return k_ == 0; }
  const CMatrix& operator()(std::size_t l, std::size_t k) const { return entries_[l * k_ + k]; }
  CMatrix& operator()(std::size_t l, std::size_t k) { return entries_[l * k_ + k]; }

 private:
  std::size_t k_ = 0;
  std::vector<CMatrix> entries_;
};

struct GramSchmidtOptions {
  /// Run the block-Gram independence test before the recursion and raise
  /// NotIndependent on failure. Off by default: a degenerate step already
  /// detects dependent input.
  bool check_independence_upfront = false;
  bool allow_reorthogonalization = true;
};

struct GramSchmidtResult {
  GramSchmidtMode mode = GramSchmidtMode::Orthonormalize;
  /// g_k (orthonormalize) or f^_k (orthogonalize).
  std::optional<SignalFamily> ortho;
  /// Orthogonalize only: mu(l, k) for l < k; zero elsewhere.
  CoefficientTable mu;
  /// Orthonormalize only: f_k = sum_{l<=k} projections(l, k) g_l, with
  /// projections(k, k) = <g^_k, g^_k>^{1/2}.
  CoefficientTable projections;
  /// ||f^_k||_M (orthogonalize) or ||g^_k||_M (orthonormalize).
  std::vector<double> step_norms;
  /// Whether step k needed a second projection pass.
  std::vector<bool> reorthogonalized;

  const SignalFamily& outputs() const { return *ortho; }
};

/// Raises DegenerateStep naming the first step whose residual signal is
/// singular at rank_rel_tol (measured against the step's input scale).
GramSchmidtResult orthonormalize(const SignalFamily& fam, const ToleranceConfig& cfg,
                                 const GramSchmidtOptions& opts = {});

GramSchmidtResult orthogonalize(const SignalFamily& fam, const ToleranceConfig& cfg,
                                const GramSchmidtOptions& opts = {});

/// F_k = <f, Phi_k>. Throws NotOrthonormal unless the basis passes
/// is_orthonormal_set at cfg.ortho_tol.
std::vector<CMatrix> expand(const MatrixSignal& f, const SignalFamily& basis,
                            const ToleranceConfig& cfg);

/// sum_k F_k Phi_k.
MatrixSignal reconstruct(std::span<const CMatrix> coeffs, const SignalFamily& basis);

/// ||<f,f> - sum_k F_k F_k^H||_F with F_k = expand(f, basis).
double parseval_residual(const MatrixSignal& f, const SignalFamily& basis,
                         const ToleranceConfig& cfg);

/// max_k ||f_k - sum_{l<=k} <f_k, g_l> g_l||, the L2 distance of each input
/// from the span of the first k orthonormal outputs.
double span_residual(const SignalFamily& inputs, const SignalFamily& orthonormal);

/// max_k ||<f_k,f_k> - <f^_k,f^_k> - sum_{l<k} mu(l,k) <f^_l,f^_l> mu(l,k)^H||_F
/// for an orthogonalize result.
double gram_identity_residual(const SignalFamily& inputs, const GramSchmidtResult& gs);

/// True iff, for every k,
///   ||f_k||^2 <= ||f^_k||^2 + sum_{l<k} ||mu(l,k)||_F^2 ||f^_l||^2
/// and ||f_k|| >= ||f^_k||, in the ||.||_M norm, each with relative slack.
bool norm_inequality_holds(const SignalFamily& inputs, const GramSchmidtResult& gs,
                           double slack = 1e-9);

}  // namespace mvsig
